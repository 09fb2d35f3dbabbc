//! Squarefree monomials of the exterior algebra on `e_1, ..., e_n`.
//!
//! A monomial `e_F` is stored as the bitmask of `F` (vertex `i` is bit
//! `i - 1`) and is always normalized with ascending indices; signs only
//! appear when two monomials are multiplied.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Largest supported ambient size (supports are `u64` masks).
pub const MAX_VARIABLES: usize = 63;

pub type Mask = u64;

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn vertex_bit(v: usize) -> Mask {
    1u64 << (v - 1)
}

/// Smallest vertex of a nonempty mask (1-based).
#[inline]
pub fn min_vertex(mask: Mask) -> Option<usize> {
    (mask != 0).then(|| mask.trailing_zeros() as usize + 1)
}

#[inline]
pub fn max_vertex(mask: Mask) -> Option<usize> {
    (mask != 0).then(|| 64 - mask.leading_zeros() as usize)
}

/// Ascending 1-based vertices of a mask.
pub fn vertices(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

pub fn mask_from_vertices(n: usize, vs: &[usize]) -> Result<Mask> {
    let mut m = 0;
    for &v in vs {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        m |= vertex_bit(v);
    }
    Ok(m)
}

/// Set rendering `{1,3,4}`.
pub fn set_string(mask: Mask) -> String {
    let vs: Vec<String> = vertices(mask).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

/// Monomial rendering `e1e3e4`, with `1` for the unit.
pub fn monomial_string(mask: Mask) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    vertices(mask).iter().map(|v| format!("e{v}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtMonomial {
    n: usize,
    support: Mask,
}

impl ExtMonomial {
    pub fn new(n: usize, support: Mask) -> Result<Self> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables(n));
        }
        if support & !full_mask(n) != 0 {
            let v = max_vertex(support).unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(Self { n, support })
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Result<Self> {
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables(n));
        }
        Self::new(n, mask_from_vertices(n, vs)?)
    }

    pub fn unit(n: usize) -> Self {
        Self { n, support: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> Mask {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn min(&self) -> Option<usize> {
        min_vertex(self.support)
    }

    pub fn vertices(&self) -> Vec<usize> {
        vertices(self.support)
    }

    pub fn divides(&self, other: &ExtMonomial) -> bool {
        self.support & !other.support == 0
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&monomial_string(self.support))
    }
}

/// Result of a wedge product of two monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedMonomial {
    Zero,
    Term { negative: bool, monomial: ExtMonomial },
}

impl SignedMonomial {
    pub fn sign(&self) -> i8 {
        match self {
            SignedMonomial::Zero => 0,
            SignedMonomial::Term { negative: true, .. } => -1,
            SignedMonomial::Term { negative: false, .. } => 1,
        }
    }

    pub fn monomial(&self) -> Option<ExtMonomial> {
        match self {
            SignedMonomial::Zero => None,
            SignedMonomial::Term { monomial, .. } => Some(*monomial),
        }
    }
}

/// Number of pairs `(x, y)` with `x` in `a`, `y` in `b` and `x > y`.
#[inline]
pub fn inversions(a: Mask, b: Mask) -> u32 {
    let mut count = 0;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        // y <= 62, so the shift is in range
        count += (a & (u64::MAX << (y + 1))).count_ones();
        rest &= rest - 1;
    }
    count
}

/// Sign of `e_a ∧ e_b` on raw masks: `None` for overlapping supports,
/// otherwise `Some(negative)`.
#[inline]
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        None
    } else {
        Some(inversions(a, b) % 2 == 1)
    }
}

pub fn wedge(a: &ExtMonomial, b: &ExtMonomial) -> Result<SignedMonomial> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch { left: a.n, right: b.n });
    }
    Ok(match wedge_sign(a.support, b.support) {
        None => SignedMonomial::Zero,
        Some(negative) => SignedMonomial::Term {
            negative,
            monomial: ExtMonomial { n: a.n, support: a.support | b.support },
        },
    })
}

/// Revlex with `e_1 < ... < e_n` on masks of equal size: `e_a > e_b` iff the
/// smallest element of the symmetric difference lies in `b`.
#[inline]
pub fn rlex_cmp_masks(a: Mask, b: Mask) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    if low & b != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub fn cmp_rlex(a: &ExtMonomial, b: &ExtMonomial) -> Result<Ordering> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch { left: a.n, right: b.n });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(rlex_cmp_masks(a.support, b.support))
}

/// Lexicographic order on sets of equal size: `a < b` iff the smallest
/// element of the symmetric difference lies in `a`.
#[inline]
pub fn lex_cmp_masks(a: Mask, b: Mask) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        Ordering::Equal
    } else if diff.trailing_zeros() == (a & diff).trailing_zeros() && a & diff != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

pub fn cmp_lex_sets(a: Mask, b: Mask) -> Result<Ordering> {
    let (la, lb) = (a.count_ones() as usize, b.count_ones() as usize);
    if la != lb {
        return Err(Error::DegreeMismatch { left: la, right: lb });
    }
    Ok(lex_cmp_masks(a, b))
}

/// All `d`-subsets of `[n]` as masks, in increasing numeric order.
pub fn subsets_of_size(n: usize, d: usize) -> Vec<Mask> {
    if d > n {
        return Vec::new();
    }
    if d == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = full_mask(n);
    let mut s: Mask = (1u64 << d) - 1;
    loop {
        out.push(s);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            break;
        }
    }
    out
}

/// `d`-subsets of `[n]` sorted descending in the revlex order.
pub fn masks_of_degree_desc(n: usize, d: usize) -> Vec<Mask> {
    let mut v = subsets_of_size(n, d);
    v.sort_by(|a, b| rlex_cmp_masks(*b, *a));
    v
}

pub fn monomials_of_degree(n: usize, d: usize) -> Result<Vec<ExtMonomial>> {
    if n > MAX_VARIABLES {
        return Err(Error::TooManyVariables(n));
    }
    if d > n {
        return Err(Error::DegreeOutOfRange { degree: d, n });
    }
    Ok(masks_of_degree_desc(n, d).into_iter().map(|support| ExtMonomial { n, support }).collect())
}

/// Column indexing of `E_d` for every `d`, in descending revlex order.
#[derive(Clone, Debug)]
pub struct ExteriorBases {
    n: usize,
    by_degree: Vec<Vec<Mask>>,
    index: MaskIndex,
}

#[derive(Clone, Debug)]
enum MaskIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<Mask, usize>),
}

const DENSE_INDEX_LIMIT: usize = 20;

impl ExteriorBases {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VARIABLES, "too many variables");
        let by_degree: Vec<Vec<Mask>> = (0..=n).map(|d| masks_of_degree_desc(n, d)).collect();
        let index = if n <= DENSE_INDEX_LIMIT {
            let mut table = vec![0u32; 1usize << n];
            for masks in &by_degree {
                for (k, &m) in masks.iter().enumerate() {
                    table[m as usize] = k as u32;
                }
            }
            MaskIndex::Dense(table)
        } else {
            let mut map = HashMap::new();
            for masks in &by_degree {
                for (k, &m) in masks.iter().enumerate() {
                    map.insert(m, k);
                }
            }
            MaskIndex::Sparse(map)
        };
        Self { n, by_degree, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Basis monomials of degree `d` (empty for `d > n`).
    pub fn basis(&self, d: usize) -> &[Mask] {
        self.by_degree.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    /// Position of `mask` within its degree.
    #[inline]
    pub fn index_of(&self, mask: Mask) -> usize {
        match &self.index {
            MaskIndex::Dense(t) => t[mask as usize] as usize,
            MaskIndex::Sparse(m) => m[&mask],
        }
    }

    /// `v ∧ l` for `v` in degree `d` and a linear form `l` (`l[k]` is the
    /// coefficient of `e_{k+1}`).
    pub fn wedge_linear_right(&self, field: &PrimeField, d: usize, v: &[u64], l: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim(d + 1)];
        for (&m, &c) in self.basis(d).iter().zip(v) {
            if c == 0 {
                continue;
            }
            for (k, &lk) in l.iter().enumerate() {
                let bit = 1u64 << k;
                if lk == 0 || m & bit != 0 {
                    continue;
                }
                let idx = self.index_of(m | bit);
                let t = field.mul(c, lk);
                // e_m ∧ e_k: one transposition per element of m above k
                let negative = (m >> (k + 1)).count_ones() % 2 == 1;
                out[idx] = if negative { field.sub(out[idx], t) } else { field.add(out[idx], t) };
            }
        }
        out
    }

    /// `l ∧ v`.
    pub fn wedge_linear_left(&self, field: &PrimeField, d: usize, l: &[u64], v: &[u64]) -> Vec<u64> {
        let mut out = self.wedge_linear_right(field, d, v, l);
        if d % 2 == 1 {
            for x in out.iter_mut() {
                *x = field.neg(*x);
            }
        }
        out
    }

    /// `e_mask ∧ v` for `v` in degree `d`.
    pub fn wedge_monomial_left(&self, field: &PrimeField, mask: Mask, d: usize, v: &[u64]) -> Vec<u64> {
        let k = mask.count_ones() as usize;
        let mut out = vec![0; self.dim(d + k)];
        for (&m, &c) in self.basis(d).iter().zip(v) {
            if c == 0 {
                continue;
            }
            if let Some(negative) = wedge_sign(mask, m) {
                let idx = self.index_of(mask | m);
                out[idx] = if negative { field.sub(out[idx], c) } else { field.add(out[idx], c) };
            }
        }
        out
    }
}
