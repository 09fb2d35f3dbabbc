//! Dense linear algebra over a prime field `F_p`.
//!
//! Everything downstream (spans of ideal components, boundary maps, Cartan
//! differentials) reduces to ranks and row-echelon forms of matrices with a
//! few hundred columns, so a plain row-major `Vec<u64>` is enough. For primes
//! below `2^31` products of two reduced elements plus one more element fit in
//! a `u64`, which lets the elimination loops use a Barrett reduction instead of
//! a hardware division.

use rand::Rng;

use crate::error::{Error, Result};

const SMALL_PRIME_BOUND: u64 = 1 << 31;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    // floor(2^64 / p), only used when p < 2^31.
    barrett: u64,
}

impl PrimeField {
    /// `2^31 - 1`.
    pub const DEFAULT_PRIME: u64 = 2_147_483_647;

    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let barrett = if p < SMALL_PRIME_BOUND { u64::MAX / p } else { 0 };
        Ok(Self { p, barrett })
    }

    /// Builds `F_p` and checks `p > n`, the standing requirement for generic
    /// draws on `n` variables.
    pub fn for_variables(p: u64, n: usize) -> Result<Self> {
        let field = Self::new(p)?;
        if p <= n as u64 {
            return Err(Error::InvalidField(format!("prime {p} must exceed n = {n}")));
        }
        Ok(field)
    }

    pub fn default_field() -> Self {
        Self::new(Self::DEFAULT_PRIME).expect("2^31 - 1 is prime")
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    fn is_small(&self) -> bool {
        self.barrett != 0
    }

    #[inline]
    fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.is_small() {
            self.reduce(a * b)
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// `a + c * b`.
    #[inline]
    pub fn mul_add(&self, a: u64, b: u64, c: u64) -> u64 {
        if self.is_small() {
            self.reduce(a + c * b)
        } else {
            ((a as u128 + c as u128 * b as u128) % self.p as u128) as u64
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        (x as i128).rem_euclid(self.p as i128) as u64
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    /// `dst -= c * src`, entrywise.
    #[inline]
    pub fn axpy_neg(&self, dst: &mut [u64], src: &[u64], c: u64) {
        let nc = self.neg(c);
        if nc == 0 {
            return;
        }
        if self.is_small() {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = self.reduce(*d + nc * s);
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = self.mul_add(*d, s, nc);
            }
        }
    }

    #[inline]
    pub fn scale(&self, row: &mut [u64], c: u64) {
        for x in row.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFp {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatrixFp {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from already-reduced rows of equal length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        Self { rows: n_rows, cols, entries }
    }

    /// Builds a matrix from signed integer rows, reducing into `F_p`.
    pub fn from_i64_rows(field: &PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let reduced = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(cols, reduced)
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, entries }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self, field: &PrimeField) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.entries[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k];
                if a != 0 {
                    field.axpy_neg(out_row, other.row(k), field.neg(a));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.entries.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    /// Eliminates `target` with the (normalized) pivot row `pivot`, starting at column `from`.
    fn eliminate_row(&mut self, field: &PrimeField, pivot: usize, target: usize, from: usize) {
        let cols = self.cols;
        let f = self.entries[target * cols + from];
        if f == 0 {
            return;
        }
        let (src, dst) = if pivot < target {
            let (head, tail) = self.entries.split_at_mut(target * cols);
            (&head[pivot * cols + from..(pivot + 1) * cols], &mut tail[from..cols])
        } else {
            let (head, tail) = self.entries.split_at_mut(pivot * cols);
            (&tail[from..cols], &mut head[target * cols + from..(target + 1) * cols])
        };
        field.axpy_neg(dst, src, f);
    }

    /// Reduced row echelon form together with the ascending pivot columns.
    pub fn rref(&self, field: &PrimeField) -> (MatrixFp, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(field, true);
        (m, pivots)
    }

    /// Gauss-Jordan in place; with `full = false` only the forward pass runs.
    fn rref_in_place(&mut self, field: &PrimeField, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c));
            let cols = self.cols;
            field.scale(&mut self.entries[r * cols + c..(r + 1) * cols], inv);
            let start = if full { 0 } else { r + 1 };
            for i in start..self.rows {
                if i != r {
                    self.eliminate_row(field, r, i, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut m = self.clone();
        m.rref_in_place(field, false).len()
    }

    pub fn rank_and_kernel_dim(&self, field: &PrimeField) -> (usize, usize) {
        let r = self.rank(field);
        (r, self.cols - r)
    }

    /// Inverse of a square matrix via RREF of `[m | I]`; `None` when singular.
    pub fn inverse(&self, field: &PrimeField) -> Option<MatrixFp> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = MatrixFp::zeros(n, 2 * n);
        for r in 0..n {
            aug.entries[r * 2 * n..r * 2 * n + n].copy_from_slice(self.row(r));
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place(field, true);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = MatrixFp::zeros(n, n);
        for r in 0..n {
            inv.entries[r * n..(r + 1) * n].copy_from_slice(&aug.row(r)[n..]);
        }
        Some(inv)
    }

    pub fn is_invertible(&self, field: &PrimeField) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }
}

pub fn rref(m: &MatrixFp, field: &PrimeField) -> (MatrixFp, Vec<usize>) {
    m.rref(field)
}

pub fn rank_and_kernel_dim(m: &MatrixFp, field: &PrimeField) -> (usize, usize) {
    m.rank_and_kernel_dim(field)
}

/// Uniformly random invertible `n x n` matrix by rejection sampling.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, field: &PrimeField, rng: &mut R) -> MatrixFp {
    assert!(n >= 1, "random_invertible needs n >= 1");
    loop {
        let entries = (0..n * n).map(|_| field.random(rng)).collect();
        let m = MatrixFp::from_flat(n, n, entries);
        if m.is_invertible(field) {
            return m;
        }
    }
}

/// Row space built one vector at a time; reports whether each new vector
/// enlarges the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    dim: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Self { field, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows (in insertion order).
    pub fn reduce(&self, v: &mut [u64]) {
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                self.field.axpy_neg(&mut v[*pc..], &row[*pc..], f);
            }
        }
    }

    /// Inserts `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let inv = self.field.inv(v[pc]);
                self.field.scale(&mut v[pc..], inv);
                self.rows.push((pc, v));
                true
            }
        }
    }
}

/// Quotient `F^cols / W` for a subspace `W` given by spanning rows.
///
/// Standard coordinates are the non-pivot columns of the RREF of `W`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: PrimeField,
    reduced: MatrixFp,
    pivots: Vec<usize>,
    standard: Vec<usize>,
    coordinate_of: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn new(field: PrimeField, subspace: &MatrixFp) -> Self {
        let (reduced, pivots) = subspace.rref(&field);
        let cols = subspace.cols();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let standard: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let mut coordinate_of = vec![None; cols];
        for (k, &c) in standard.iter().enumerate() {
            coordinate_of[c] = Some(k);
        }
        Self { field, reduced, pivots, standard, coordinate_of }
    }

    /// Quotient by the zero subspace of `F^cols`.
    pub fn whole(field: PrimeField, cols: usize) -> Self {
        Self::new(field, &MatrixFp::zeros(0, cols))
    }

    pub fn ambient_dim(&self) -> usize {
        self.coordinate_of.len()
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Ambient columns that form the quotient basis.
    pub fn standard_columns(&self) -> &[usize] {
        &self.standard
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of the class of `v` in the standard basis.
    pub fn normal_form(&self, v: &[u64]) -> Vec<u64> {
        let mut w = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f != 0 {
                self.field.axpy_neg(&mut w, self.reduced.row(r), f);
            }
        }
        self.standard.iter().map(|&c| w[c]).collect()
    }

    pub fn coordinate_of(&self, column: usize) -> Option<usize> {
        self.coordinate_of[column]
    }
}
