//! Cartan complexes with values in `E/J` and exterior Betti numbers.
//!
//! `C_i(v_1..v_r; E/J)_j` has basis `x^(a) ⊗ q` with `|a| = i` a multi-index
//! over `[r]` and `q` a standard monomial of `E/J` of degree `j - i`. The
//! differential is `x^(a) ⊗ m ↦ Σ_{a_k > 0} x^(a - ε_k) ⊗ v_k m`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exterior::{full_mask, wedge_sign, ExteriorBases, Mask};
use crate::generic::{purpose, GenericContext};
use crate::ideal::{binomial, BettiTable, MonomialIdeal, Ring};
use crate::linalg::{MatrixFp, PrimeField};

/// Cost guards for dense Cartan computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanLimits {
    pub max_n: usize,
    pub max_i: usize,
    pub max_columns: usize,
}

impl Default for CartanLimits {
    fn default() -> Self {
        Self { max_n: 6, max_i: 6, max_columns: 4000 }
    }
}

/// Standard monomials of `(E/J)_d` and the projection onto them.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    degree: usize,
    standard: Vec<Mask>,
    position: HashMap<Mask, usize>,
    // position in `standard` of each column of E_d, if any
    by_column: Vec<Option<usize>>,
}

impl QuotientBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn standard(&self) -> &[Mask] {
        &self.standard
    }

    pub fn coordinate(&self, m: Mask) -> Option<usize> {
        self.position.get(&m).copied()
    }

    /// Quotient coordinates of a vector of `E_d` (monomials of `J` vanish).
    pub fn normal_form(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim()];
        for (c, &x) in v.iter().enumerate() {
            if let Some(k) = self.by_column[c] {
                out[k] = x;
            }
        }
        out
    }
}

/// Quotient basis of `(E/J)_d` for a monomial ideal `J`.
pub fn quotient_basis(ideal: &MonomialIdeal, d: usize, bases: &ExteriorBases) -> QuotientBasis {
    let cols = bases.basis(d);
    let mut standard = Vec::new();
    let mut by_column = vec![None; cols.len()];
    for (c, &m) in cols.iter().enumerate() {
        if !ideal.contains_mask(m) {
            by_column[c] = Some(standard.len());
            standard.push(m);
        }
    }
    let position = standard.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    QuotientBasis { degree: d, standard, position, by_column }
}

/// Multi-indices `a ∈ N^r` with `|a| = i`, in lexicographic order.
pub fn multi_indices(r: usize, i: usize) -> Vec<Vec<u8>> {
    fn rec(k: usize, r: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k + 1 == r {
            cur[k] = left as u8;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e as u8;
            rec(k + 1, r, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    if r == 0 {
        if i == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, r, i, &mut vec![0; r], &mut out);
    out
}

/// The Cartan complex of a fixed sequence `v_1..v_r` on `E/J`, with
/// memoized differential ranks.
pub struct CartanComplex {
    field: PrimeField,
    n: usize,
    r: usize,
    quotients: Vec<QuotientBasis>,
    // mult[k][s][q] = coordinates of v_k ∧ (q-th standard monomial of degree s) in degree s + 1
    mult: Vec<Vec<Vec<Vec<u64>>>>,
    ranks: HashMap<(usize, usize), usize>,
    limits: CartanLimits,
}

impl CartanComplex {
    /// `vs[k]` is the coefficient vector of `v_{k+1}` in `e_1..e_n`.
    pub fn new(ideal: &MonomialIdeal, vs: &[Vec<u64>], field: &PrimeField, limits: CartanLimits) -> Result<Self> {
        if ideal.ring() != Ring::Exterior {
            return Err(Error::RingMismatch("Cartan complexes live over E".into()));
        }
        let n = ideal.n();
        let r = vs.len();
        if n > limits.max_n {
            return Err(Error::SizeLimit(format!("Cartan complex needs n <= {}, got {n}", limits.max_n)));
        }
        if r == 0 || r > n {
            return Err(Error::IndexOutOfRange(format!("sequence length {r} must lie in 1..={n}")));
        }
        if vs.iter().any(|v| v.len() != n) {
            return Err(Error::AmbientMismatch { left: vs[0].len(), right: n });
        }
        if MatrixFp::from_rows(n, vs.to_vec()).rank(field) < r {
            return Err(Error::DependentSequence);
        }
        let bases = ExteriorBases::new(n);
        let quotients: Vec<QuotientBasis> = (0..=n).map(|d| quotient_basis(ideal, d, &bases)).collect();
        let mut mult = Vec::with_capacity(r);
        for v in vs {
            let mut per_degree = Vec::with_capacity(n + 1);
            for s in 0..=n {
                let mut images = Vec::with_capacity(quotients[s].dim());
                for &m in quotients[s].standard() {
                    if s == n {
                        images.push(Vec::new());
                        continue;
                    }
                    let mut unit = vec![0u64; bases.dim(s)];
                    unit[bases.index_of(m)] = 1;
                    let w = bases.wedge_linear_left(field, s, v, &unit);
                    images.push(quotients[s + 1].normal_form(&w));
                }
                per_degree.push(images);
            }
            mult.push(per_degree);
        }
        Ok(Self { field: *field, n, r, quotients, mult, ranks: HashMap::new(), limits })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn quotient_dim(&self, s: isize) -> usize {
        if s < 0 || s as usize > self.n {
            0
        } else {
            self.quotients[s as usize].dim()
        }
    }

    /// `dim C_{i,j}`.
    pub fn chain_dim(&self, i: usize, j: usize) -> usize {
        multi_count(self.r, i) * self.quotient_dim(j as isize - i as isize)
    }

    /// Matrix of `∂_i : C_{i,j} -> C_{i-1,j}` (rows index the target).
    pub fn differential(&self, i: usize, j: usize) -> Result<MatrixFp> {
        if i == 0 {
            return Err(Error::IndexOutOfRange("∂_0 is the zero map".into()));
        }
        if i > self.limits.max_i {
            return Err(Error::SizeLimit(format!("homological degree {i} exceeds {}", self.limits.max_i)));
        }
        let src_deg = j as isize - i as isize;
        let q_src = self.quotient_dim(src_deg);
        let q_dst = self.quotient_dim(src_deg + 1);
        let src_idx = multi_indices(self.r, i);
        let dst_idx = multi_indices(self.r, i - 1);
        let cols = src_idx.len() * q_src;
        if cols > self.limits.max_columns {
            return Err(Error::SizeLimit(format!("Cartan differential with {cols} columns")));
        }
        let rows = dst_idx.len() * q_dst;
        let mut m = MatrixFp::zeros(rows, cols);
        if rows == 0 || cols == 0 {
            return Ok(m);
        }
        let position: HashMap<&[u8], usize> = dst_idx.iter().enumerate().map(|(k, a)| (a.as_slice(), k)).collect();
        let s = src_deg as usize;
        let mut lowered = vec![0u8; self.r];
        for (ai, a) in src_idx.iter().enumerate() {
            for k in 0..self.r {
                if a[k] == 0 {
                    continue;
                }
                lowered.copy_from_slice(a);
                lowered[k] -= 1;
                let block = position[lowered.as_slice()];
                for q in 0..q_src {
                    let col = ai * q_src + q;
                    for (q2, &x) in self.mult[k][s][q].iter().enumerate() {
                        if x != 0 {
                            let row = block * q_dst + q2;
                            let cur = m.get(row, col);
                            m.set(row, col, self.field.add(cur, x));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// `rank ∂_i` in internal degree `j`, memoized.
    pub fn rank(&mut self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j < i || multi_count(self.r, i) == 0 {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        let r = self.differential(i, j)?.rank(&self.field);
        self.ranks.insert((i, j), r);
        Ok(r)
    }

    /// `h_{i,j}(r) = dim H_i(v_1..v_r; E/J)_j`.
    pub fn homology_dim(&mut self, i: usize, j: usize) -> Result<usize> {
        let dim = self.chain_dim(i, j);
        if dim == 0 {
            return Ok(0);
        }
        Ok(dim - self.rank(i, j)? - self.rank(i + 1, j)?)
    }
}

fn multi_count(r: usize, i: usize) -> usize {
    if r == 0 {
        return usize::from(i == 0);
    }
    binomial((i + r - 1) as i64, i as i64) as usize
}

pub fn cartan_differential(ideal: &MonomialIdeal, vs: &[Vec<u64>], i: usize, j: usize, field: &PrimeField) -> Result<MatrixFp> {
    CartanComplex::new(ideal, vs, field, CartanLimits::default())?.differential(i, j)
}

pub fn cartan_homology_dim(ideal: &MonomialIdeal, vs: &[Vec<u64>], i: usize, j: usize, field: &PrimeField) -> Result<usize> {
    CartanComplex::new(ideal, vs, field, CartanLimits::default())?.homology_dim(i, j)
}

/// First `r` columns of `gamma` as a sequence of linear forms.
pub fn columns_as_sequence(gamma: &MatrixFp, r: usize) -> Vec<Vec<u64>> {
    (0..r).map(|k| gamma.column(k)).collect()
}

/// `β^E_{i,j}(E/J) = h_{i,j}(n)` for generic sequences, across trials.
pub fn betti_e(ideal: &MonomialIdeal, ctx: &GenericContext, i: usize, j: usize) -> Result<u64> {
    betti_e_with_limits(ideal, ctx, i, j, CartanLimits::default())
}

pub fn betti_e_with_limits(ideal: &MonomialIdeal, ctx: &GenericContext, i: usize, j: usize, limits: CartanLimits) -> Result<u64> {
    let mut complexes = generic_cartan_complexes(ideal, ctx, ideal.n(), purpose::CARTAN, limits)?;
    agree_on(&mut complexes, |c| c.homology_dim(i, j)).map(|h| h as u64)
}

/// One Cartan complex per trial, on the first `r` columns of a random transform.
pub fn generic_cartan_complexes(ideal: &MonomialIdeal, ctx: &GenericContext, r: usize, tag: u64, limits: CartanLimits) -> Result<Vec<CartanComplex>> {
    let n = ideal.n();
    (0..ctx.trials())
        .map(|t| {
            let gamma = ctx.random_transform(n, t, tag);
            CartanComplex::new(ideal, &columns_as_sequence(&gamma, r), ctx.field(), limits)
        })
        .collect()
}

/// Evaluates `f` on every trial's complex and insists on one answer.
pub fn agree_on<F>(complexes: &mut [CartanComplex], mut f: F) -> Result<usize>
where
    F: FnMut(&mut CartanComplex) -> Result<usize>,
{
    let mut value = None;
    for c in complexes.iter_mut() {
        let h = f(c)?;
        match value {
            None => value = Some(h),
            Some(v) if v != h => {
                return Err(Error::GenericityFailure(format!("Cartan homology differs across trials: {v} vs {h}")));
            }
            Some(_) => {}
        }
    }
    value.ok_or_else(|| Error::GenericityFailure("no trials".into()))
}

/// Dense generic table `β^E_{i,i+j}` for `i <= max_i`, `j <= max_j`.
pub fn betti_e_table(ideal: &MonomialIdeal, ctx: &GenericContext, max_i: usize, max_j: usize, limits: CartanLimits) -> Result<BettiTable> {
    let mut complexes = generic_cartan_complexes(ideal, ctx, ideal.n(), purpose::CARTAN, limits)?;
    let mut table = BettiTable::new();
    for i in 0..=max_i {
        for j in 0..=max_j {
            let h = agree_on(&mut complexes, |c| c.homology_dim(i, i + j))?;
            table.set(i, i + j, h as u64);
        }
    }
    Ok(table)
}

/// `β^E` from the Cartan complex of `e_1..e_n`, split by multidegree.
///
/// For that sequence the complex is `N^n`-graded and the block in
/// multidegree `α` only depends on `U = supp α`: it has basis the standard
/// monomials `e_F`, `F ⊆ U`, with `e_F ↦ Σ_{k ∈ U \ F} e_k ∧ e_F`. A class at
/// `|F| = f` contributes to `β_{|α| - f, |α|}` once for each of the
/// `C(|α| - 1, |U| - 1)` multidegrees with support `U`.
pub fn betti_e_multigraded(ideal: &MonomialIdeal, field: &PrimeField, max_i: usize, max_degree: usize) -> Result<BettiTable> {
    if ideal.ring() != Ring::Exterior {
        return Err(Error::RingMismatch("exterior Betti numbers need an exterior ideal".into()));
    }
    let n = ideal.n();
    if n > 20 {
        return Err(Error::SizeLimit(format!("n = {n} is too large for the multigraded route")));
    }
    let member = ideal.membership_table();
    let mut table = BettiTable::new();
    for u in 0..=full_mask(n) {
        let size = u.count_ones() as usize;
        // standard monomials inside U, grouped by degree
        let mut levels: Vec<Vec<Mask>> = vec![Vec::new(); size + 1];
        let mut f = u;
        loop {
            if !member[f as usize] {
                levels[f.count_ones() as usize].push(f);
            }
            if f == 0 {
                break;
            }
            f = (f - 1) & u;
        }
        for l in levels.iter_mut() {
            l.sort_unstable();
        }
        let mut ranks = vec![0usize; size + 2];
        for d in 0..size {
            let (src, dst) = (&levels[d], &levels[d + 1]);
            if src.is_empty() || dst.is_empty() {
                continue;
            }
            let mut m = MatrixFp::zeros(dst.len(), src.len());
            for (c, &g) in src.iter().enumerate() {
                let mut rest = u & !g;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if let Ok(row) = dst.binary_search(&(g | bit)) {
                        let negative = wedge_sign(bit, g).expect("disjoint");
                        m.set(row, c, if negative { field.neg(1) } else { 1 });
                    }
                }
            }
            // rank of the map leaving degree d, stored at d + 1
            ranks[d + 1] = m.rank(field);
        }
        for d in 0..=size {
            let h = levels[d].len() - ranks[d + 1] - ranks[d];
            if h == 0 {
                continue;
            }
            // internal degree m = i + d with |α| = m
            for m in size.max(d)..=max_degree {
                let i = m - d;
                if i > max_i {
                    break;
                }
                let count = if size == 0 { u64::from(m == 0) } else { binomial(m as i64 - 1, size as i64 - 1) };
                if count > 0 {
                    table.add(i, m, h as u64 * count);
                }
            }
        }
    }
    Ok(table)
}

/// `β^E_{i,i+j} = Σ_{k=0}^{i} C(i+j-1, j+k-1) β^S_{k,k+j}`; for `i = 0` the
/// value is `β^S_{0,j}` directly.
pub fn betti_e_from_betti_s(table_s: &BettiTable, i: usize, j: usize) -> u64 {
    if i == 0 {
        return table_s.get(0, j);
    }
    (0..=i)
        .map(|k| binomial((i + j) as i64 - 1, (j + k) as i64 - 1) * table_s.get_ij(k, j))
        .sum()
}

/// `cx_E = n - depth_E`.
pub fn complexity_e(depth_e: usize, n: usize) -> Result<usize> {
    n.checked_sub(depth_e).ok_or_else(|| Error::IndexOutOfRange(format!("depth {depth_e} exceeds n = {n}")))
}
