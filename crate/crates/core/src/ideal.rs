//! Monomial ideals in `E` and `S`, stability predicates, closed formulas for
//! stable ideals and graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{full_mask, lex_cmp_masks, min_vertex, monomial_string, subsets_of_size, Mask, MAX_VARIABLES};
use crate::linalg::{MatrixFp, PrimeField};
use crate::simplicial::SimplicialComplex;
use crate::symmetric::{self, Exponents};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Ring {
    Exterior,
    SymmetricSquarefree,
    SymmetricGeneral,
}

impl Ring {
    pub fn is_symmetric(self) -> bool {
        self != Ring::Exterior
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Exterior => "E",
            Ring::SymmetricSquarefree => "S (squarefree)",
            Ring::SymmetricGeneral => "S",
        })
    }
}

/// Monomial ideal given by its minimal generators.
///
/// Squarefree flavors keep supports as masks; the general symmetric flavor
/// keeps exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    n: usize,
    masks: Vec<Mask>,
    exponents: Vec<Exponents>,
}

fn sort_masks(v: &mut [Mask]) {
    v.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp_masks(*a, *b)));
}

fn sort_exponents(v: &mut [Exponents]) {
    v.sort_by(|a, b| symmetric::degree(a).cmp(&symmetric::degree(b)).then(b.cmp(a)));
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens` (supports).
    pub fn minimalize(ring: Ring, n: usize, gens: &[Mask]) -> Result<Self> {
        if ring == Ring::SymmetricGeneral {
            let ex: Vec<Exponents> = gens.iter().map(|&g| mask_to_exponents(n, g)).collect();
            return Self::minimalize_exponents(n, &ex);
        }
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables(n));
        }
        let mut masks = Vec::new();
        for &g in gens {
            if g == 0 {
                return Err(Error::UnitGenerator);
            }
            if g & !full_mask(n) != 0 {
                return Err(Error::VertexOutOfRange { vertex: 64 - g.leading_zeros() as usize, n });
            }
            masks.push(g);
        }
        sort_masks(&mut masks);
        masks.dedup();
        let mut min: Vec<Mask> = Vec::new();
        for g in masks {
            if !min.iter().any(|&h| h & !g == 0) {
                min.push(g);
            }
        }
        Ok(Self { ring, n, masks: min, exponents: Vec::new() })
    }

    /// Minimal generators of an ideal in `S` given by exponent vectors.
    pub fn minimalize_exponents(n: usize, gens: &[Exponents]) -> Result<Self> {
        let mut ex = Vec::new();
        for g in gens {
            if g.len() != n {
                return Err(Error::AmbientMismatch { left: g.len(), right: n });
            }
            if symmetric::degree(g) == 0 {
                return Err(Error::UnitGenerator);
            }
            ex.push(g.clone());
        }
        sort_exponents(&mut ex);
        ex.dedup();
        let mut min: Vec<Exponents> = Vec::new();
        for g in ex {
            if !min.iter().any(|h| symmetric::divides(h, &g)) {
                min.push(g);
            }
        }
        if min.iter().all(|g| symmetric::is_squarefree(g)) {
            let masks = min.iter().map(|g| exponents_to_mask(g)).collect();
            return Ok(Self { ring: Ring::SymmetricSquarefree, n, masks, exponents: Vec::new() });
        }
        Ok(Self { ring: Ring::SymmetricGeneral, n, masks: Vec::new(), exponents: min })
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        let ring = if ring == Ring::SymmetricGeneral { Ring::SymmetricSquarefree } else { ring };
        Self { ring, n, masks: Vec::new(), exponents: Vec::new() }
    }

    /// `J_Δ` (exterior) or `I_Δ` (symmetric) of a complex.
    pub fn face_ideal(delta: &SimplicialComplex, ring: Ring) -> Self {
        let ring = if ring == Ring::Exterior { Ring::Exterior } else { Ring::SymmetricSquarefree };
        Self { ring, n: delta.n(), masks: delta.minimal_nonfaces(), exponents: Vec::new() }
    }

    /// Same squarefree generators in another ring.
    pub fn with_ring(&self, ring: Ring) -> Result<Self> {
        if !self.is_squarefree() || ring == Ring::SymmetricGeneral {
            return Err(Error::RingMismatch(format!("cannot move a {} ideal to {}", self.ring, ring)));
        }
        Ok(Self { ring, ..self.clone() })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_squarefree(&self) -> bool {
        self.ring != Ring::SymmetricGeneral
    }

    pub fn is_zero(&self) -> bool {
        self.masks.is_empty() && self.exponents.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.masks.len() + self.exponents.len()
    }

    /// Generator supports (squarefree flavors only).
    pub fn masks(&self) -> &[Mask] {
        &self.masks
    }

    /// Generators as exponent vectors (0/1 for squarefree flavors).
    pub fn exponent_generators(&self) -> Vec<Exponents> {
        if self.is_squarefree() {
            self.masks.iter().map(|&m| mask_to_exponents(self.n, m)).collect()
        } else {
            self.exponents.clone()
        }
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        if self.is_squarefree() {
            self.masks.iter().map(|m| m.count_ones() as usize).collect()
        } else {
            self.exponents.iter().map(|e| symmetric::degree(e)).collect()
        }
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generator_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_generator_degree(&self) -> usize {
        self.generator_degrees().into_iter().min().unwrap_or(0)
    }

    /// Membership of a squarefree monomial.
    pub fn contains_mask(&self, m: Mask) -> bool {
        if self.is_squarefree() {
            self.masks.iter().any(|&g| g & !m == 0)
        } else {
            let u = mask_to_exponents(self.n, m);
            self.contains_exponents(&u)
        }
    }

    /// Membership of a monomial of `S` (for exterior ideals only squarefree
    /// inputs are meaningful).
    pub fn contains_exponents(&self, u: &[u32]) -> bool {
        if self.is_squarefree() {
            let support = exponents_to_mask(u);
            if self.ring == Ring::Exterior && !symmetric::is_squarefree(u) {
                return true;
            }
            self.masks.iter().any(|&g| g & !support == 0)
        } else {
            self.exponents.iter().any(|g| symmetric::divides(g, u))
        }
    }

    /// Ideal-membership table over all squarefree monomials (`n <= 20`).
    pub fn membership_table(&self) -> Vec<bool> {
        let size = 1usize << self.n;
        let mut table = vec![false; size];
        for (m, slot) in table.iter_mut().enumerate() {
            *slot = self.contains_mask(m as Mask);
        }
        table
    }

    pub fn generator_strings(&self) -> Vec<String> {
        if self.is_squarefree() {
            match self.ring {
                Ring::Exterior => self.masks.iter().map(|&m| monomial_string(m)).collect(),
                _ => self.masks.iter().map(|&m| symmetric::monomial_string(&mask_to_exponents(self.n, m))).collect(),
            }
        } else {
            self.exponents.iter().map(|e| symmetric::monomial_string(e)).collect()
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

pub fn mask_to_exponents(n: usize, m: Mask) -> Exponents {
    (0..n).map(|k| ((m >> k) & 1) as u32).collect()
}

pub fn exponents_to_mask(u: &[u32]) -> Mask {
    u.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (k, _)| acc | (1 << k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityFlags {
    pub stable: bool,
    pub strongly_stable: bool,
    pub squarefree_stable: bool,
}

/// The min-based exchange conditions, checked over every squarefree
/// monomial of the ideal (squarefree flavors) or over the generators
/// (general symmetric flavor, where generators suffice).
pub fn stability_flags(ideal: &MonomialIdeal) -> StabilityFlags {
    if ideal.is_squarefree() {
        let n = ideal.n;
        let member = ideal.membership_table();
        let mut stable = true;
        let mut strongly = true;
        for a in 0..(1usize << n) {
            if !member[a] || a == 0 {
                continue;
            }
            let a = a as Mask;
            let low = a & a.wrapping_neg();
            let rest = a ^ low;
            for i in 0..n {
                let bit = 1u64 << i;
                if a & bit != 0 {
                    continue;
                }
                if bit > low && !member[(rest | bit) as usize] {
                    stable = false;
                }
                // replace any j < i in a by i
                let mut below = a & (bit - 1);
                while below != 0 {
                    let j = below & below.wrapping_neg();
                    below ^= j;
                    if !member[((a ^ j) | bit) as usize] {
                        strongly = false;
                    }
                }
            }
        }
        return StabilityFlags { stable, strongly_stable: strongly, squarefree_stable: stable };
    }
    let n = ideal.n;
    let mut stable = true;
    let mut strongly = true;
    for u in &ideal.exponents {
        let m = symmetric::min_index(u).expect("proper generator") - 1;
        for i in 0..n {
            if i > m {
                let mut w = u.clone();
                w[m] -= 1;
                w[i] += 1;
                if !ideal.contains_exponents(&w) {
                    stable = false;
                }
            }
            for j in 0..i {
                if u[j] > 0 {
                    let mut w = u.clone();
                    w[j] -= 1;
                    w[i] += 1;
                    if !ideal.contains_exponents(&w) {
                        strongly = false;
                    }
                }
            }
        }
    }
    StabilityFlags { stable, strongly_stable: strongly, squarefree_stable: false }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StableInvariants {
    pub depth_e: Option<usize>,
    pub depth_s: Option<usize>,
    pub reg_s: Option<usize>,
}

/// Closed formulas for stable ideals: `depth_E` for exterior ideals,
/// `depth_S` and `reg_S` for symmetric ones.
pub fn stable_invariants(ideal: &MonomialIdeal) -> Result<StableInvariants> {
    let n = ideal.n;
    if ideal.is_zero() {
        return Ok(match ideal.ring {
            Ring::Exterior => StableInvariants { depth_e: Some(n), depth_s: None, reg_s: None },
            _ => StableInvariants { depth_e: None, depth_s: Some(n), reg_s: Some(0) },
        });
    }
    let flags = stability_flags(ideal);
    match ideal.ring {
        Ring::Exterior => {
            if !flags.stable {
                return Err(Error::StabilityViolation("depth_E formula needs a stable ideal".into()));
            }
            let m = ideal.masks.iter().map(|&u| min_vertex(u).unwrap()).min().unwrap();
            Ok(StableInvariants { depth_e: Some(m - 1), depth_s: None, reg_s: None })
        }
        Ring::SymmetricSquarefree => {
            if !flags.squarefree_stable {
                return Err(Error::StabilityViolation("depth_S formula needs a squarefree stable ideal".into()));
            }
            let d = ideal.masks.iter().map(|&u| min_vertex(u).unwrap() + u.count_ones() as usize).min().unwrap();
            let reg = ideal.max_generator_degree() - 1;
            Ok(StableInvariants { depth_e: None, depth_s: Some(d - 2), reg_s: Some(reg) })
        }
        Ring::SymmetricGeneral => {
            if !flags.stable {
                return Err(Error::StabilityViolation("depth_S formula needs a stable ideal".into()));
            }
            let m = ideal.exponents.iter().map(|u| symmetric::min_index(u).unwrap()).min().unwrap();
            let reg = ideal.max_generator_degree() - 1;
            Ok(StableInvariants { depth_e: None, depth_s: Some(m - 1), reg_s: Some(reg) })
        }
    }
}

/// `C(a, b)` with the convention `0` for `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc * (a - k) as u128 / (k + 1) as u128;
    }
    acc as u64
}

/// Sparse graded Betti numbers keyed by `(i, internal degree)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `β_{i, degree}`.
    pub fn get(&self, i: usize, degree: usize) -> u64 {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    /// `β_{i, i+j}`.
    pub fn get_ij(&self, i: usize, j: usize) -> u64 {
        self.get(i, i + j)
    }

    pub fn set(&mut self, i: usize, degree: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, degree));
        } else {
            self.entries.insert((i, degree), value);
        }
    }

    pub fn add(&mut self, i: usize, degree: usize, value: u64) {
        let v = self.get(i, degree) + value;
        self.set(i, degree, v);
    }

    /// Nonzero entries `(i, degree, value)` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, d), &v)| (i, d, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max { j : β_{i,i+j} != 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, d)| d - i).max()
    }

    /// Entries with `i <= max_i` and `degree - i <= max_j`.
    pub fn window(&self, max_i: usize, max_j: usize) -> BettiTable {
        let entries = self.entries.iter().filter(|(&(i, d), _)| i <= max_i && d - i <= max_j).map(|(k, v)| (*k, *v)).collect();
        BettiTable { entries }
    }
}

/// Eliahou–Kervaire type formula for squarefree stable ideals of `S`:
/// `β_{i,i+j} = Σ_{u ∈ G(I)_{j+1}} C(n - min(u) - j, i - 1)`.
pub fn betti_s_eliahou_kervaire(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.ring.is_symmetric() || !ideal.is_squarefree() {
        return Err(Error::RingMismatch("expected a squarefree ideal of S".into()));
    }
    if !ideal.is_zero() && !stability_flags(ideal).squarefree_stable {
        return Err(Error::StabilityViolation("ideal is not squarefree stable".into()));
    }
    let n = ideal.n as i64;
    let mut t = BettiTable::new();
    t.set(0, 0, 1);
    for &u in &ideal.masks {
        let j = u.count_ones() as i64 - 1;
        let m = min_vertex(u).unwrap() as i64;
        for i in 1..=ideal.n {
            let c = binomial(n - m - j, i as i64 - 1);
            if c > 0 {
                t.add(i, i + j as usize, c);
            }
        }
    }
    Ok(t)
}

/// `depth_S = n - projdim`.
pub fn depth_s_via_auslander_buchsbaum(table: &BettiTable, n: usize) -> Result<usize> {
    let p = table.projdim().ok_or(Error::EmptyTable)?;
    n.checked_sub(p).ok_or_else(|| Error::IndexOutOfRange(format!("projdim {p} exceeds n = {n}")))
}

/// Largest ambient size the Koszul oracle accepts.
pub const KOSZUL_MAX_N: usize = 6;

/// `Tor^S(S/I, K)` from the Koszul complex, one multidegree at a time.
///
/// In multidegree `α` the chain group in homological degree `i` has basis
/// `e_T ⊗ x^{α - 1_T}` with `|T| = i` and `x^{α - 1_T} ∉ I`. Multidegrees
/// are restricted to the lcm lattice box, outside of which Tor vanishes.
pub fn koszul_betti_oracle(ideal: &MonomialIdeal, field: &PrimeField, i_max: usize, d_max: usize) -> Result<BettiTable> {
    if !ideal.ring.is_symmetric() {
        return Err(Error::RingMismatch("Koszul oracle works over S".into()));
    }
    let n = ideal.n;
    if n > KOSZUL_MAX_N {
        return Err(Error::SizeLimit(format!("Koszul oracle needs n <= {KOSZUL_MAX_N}, got {n}")));
    }
    let gens = ideal.exponent_generators();
    let bound: Vec<u32> = (0..n).map(|k| gens.iter().map(|g| g[k]).max().unwrap_or(0)).collect();
    let mut table = BettiTable::new();
    let mut alpha = vec![0u32; n];
    loop {
        let deg = symmetric::degree(&alpha);
        if deg <= d_max {
            koszul_block(ideal, field, &alpha, i_max, &mut table);
        }
        // odometer over the box
        let mut k = 0;
        while k < n && alpha[k] == bound[k] {
            alpha[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        alpha[k] += 1;
    }
    Ok(table)
}

fn koszul_block(ideal: &MonomialIdeal, field: &PrimeField, alpha: &[u32], i_max: usize, table: &mut BettiTable) {
    let n = alpha.len();
    let support = exponents_to_mask(alpha);
    let deg = symmetric::degree(alpha);
    let top = support.count_ones() as usize;
    let live = |t: Mask| -> bool {
        let m: Exponents = (0..n).map(|k| alpha[k] - ((t >> k) & 1) as u32).collect();
        !ideal.contains_exponents(&m)
    };
    // bases[i] = subsets T of the support with |T| = i and a live coefficient
    let bases: Vec<Vec<Mask>> = (0..=top)
        .map(|i| subsets_of_size(n, i).into_iter().filter(|&t| t & !support == 0 && live(t)).collect())
        .collect();
    let mut ranks = vec![0usize; top + 2];
    for i in 1..=top {
        let (src, dst) = (&bases[i], &bases[i - 1]);
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let mut m = MatrixFp::zeros(dst.len(), src.len());
        for (c, &t) in src.iter().enumerate() {
            let mut rest = t;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if let Ok(r) = dst.binary_search_by(|x| x.cmp(&(t ^ bit))) {
                    m.set(r, c, if pos % 2 == 0 { 1 } else { field.neg(1) });
                }
                pos += 1;
            }
        }
        ranks[i] = m.rank(field);
    }
    for i in 0..=top.min(i_max) {
        let h = bases[i].len() - ranks[i] - ranks[i + 1];
        if h > 0 {
            table.add(i, deg, h as u64);
        }
    }
}

/// Number of degree-`d` monomials outside the ideal that avoid every
/// variable in `prefix` (1-based indices).
pub fn quotient_dim_degree(ideal: &MonomialIdeal, prefix: &[usize], d: usize) -> usize {
    let n = ideal.n;
    let avoid: Mask = prefix.iter().fold(0, |acc, &v| acc | (1 << (v - 1)));
    if ideal.ring == Ring::Exterior {
        if d > n {
            return 0;
        }
        return subsets_of_size(n, d).into_iter().filter(|&m| m & avoid == 0 && !ideal.contains_mask(m)).count();
    }
    let free: Vec<usize> = (0..n).filter(|k| avoid & (1 << k) == 0).collect();
    symmetric::monomials_of_degree(free.len(), d)
        .into_iter()
        .filter(|w| {
            let mut u = vec![0u32; n];
            for (k, &e) in free.iter().zip(w) {
                u[*k] = e;
            }
            !ideal.contains_exponents(&u)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::mask_from_vertices;
    use proptest::prelude::*;

    fn m(vs: &[usize]) -> Mask {
        mask_from_vertices(10, vs).unwrap()
    }

    fn not_cm(ring: Ring) -> MonomialIdeal {
        MonomialIdeal::minimalize(ring, 4, &[m(&[3, 4]), m(&[1, 2, 4])]).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let j = MonomialIdeal::minimalize(Ring::Exterior, 4, &[m(&[3, 4]), m(&[1, 3, 4])]).unwrap();
        assert_eq!(j.masks(), &[m(&[3, 4])]);
        assert_eq!(not_cm(Ring::Exterior).masks(), &[m(&[3, 4]), m(&[1, 2, 4])]);
        let z = MonomialIdeal::minimalize(Ring::Exterior, 4, &[]).unwrap();
        assert!(z.is_zero());
        assert_eq!(MonomialIdeal::minimalize(Ring::Exterior, 4, &[0]).unwrap_err(), Error::UnitGenerator);
        let a = MonomialIdeal::minimalize(Ring::Exterior, 4, &[m(&[1, 2, 4]), m(&[3, 4]), m(&[2, 3, 4])]).unwrap();
        let b = MonomialIdeal::minimalize(Ring::Exterior, 4, &[m(&[2, 3, 4]), m(&[3, 4]), m(&[1, 2, 4])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn general_minimalize() {
        let i = MonomialIdeal::minimalize_exponents(3, &[vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(i.ring(), Ring::SymmetricGeneral);
        assert_eq!(i.num_generators(), 3);
        assert!(i.contains_exponents(&[1, 1, 1]));
        assert!(!i.contains_exponents(&[1, 1, 0]));
    }

    #[test]
    fn stability_examples() {
        assert!(stability_flags(&not_cm(Ring::Exterior)).stable);
        let j = MonomialIdeal::minimalize(Ring::Exterior, 3, &[m(&[1, 2])]).unwrap();
        assert!(!stability_flags(&j).stable);
        let en = MonomialIdeal::minimalize(Ring::Exterior, 5, &[m(&[5])]).unwrap();
        let f = stability_flags(&en);
        assert!(f.stable && f.strongly_stable);
        let s = MonomialIdeal::minimalize_exponents(3, &[vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]).unwrap();
        assert!(stability_flags(&s).strongly_stable);
        let not_s = MonomialIdeal::minimalize_exponents(3, &[vec![2, 0, 0]]).unwrap();
        assert!(!stability_flags(&not_s).stable);
    }

    #[test]
    fn stable_invariant_examples() {
        let inv = stable_invariants(&not_cm(Ring::SymmetricSquarefree)).unwrap();
        assert_eq!((inv.depth_s, inv.reg_s), (Some(2), Some(2)));
        assert_eq!(stable_invariants(&not_cm(Ring::Exterior)).unwrap().depth_e, Some(0));
        let j = MonomialIdeal::minimalize(Ring::Exterior, 4, &[m(&[2, 3, 4])]).unwrap();
        assert_eq!(stable_invariants(&j).unwrap().depth_e, Some(1));
        let bad = MonomialIdeal::minimalize(Ring::Exterior, 3, &[m(&[1, 2])]).unwrap();
        assert!(matches!(stable_invariants(&bad), Err(Error::StabilityViolation(_))));
        let z = MonomialIdeal::zero(Ring::Exterior, 4);
        assert_eq!(stable_invariants(&z).unwrap().depth_e, Some(4));
        let zs = MonomialIdeal::zero(Ring::SymmetricSquarefree, 4);
        let inv = stable_invariants(&zs).unwrap();
        assert_eq!((inv.depth_s, inv.reg_s), (Some(4), Some(0)));
    }

    #[test]
    fn eliahou_kervaire_examples() {
        let t = betti_s_eliahou_kervaire(&not_cm(Ring::SymmetricSquarefree)).unwrap();
        let e: Vec<_> = t.entries().collect();
        assert_eq!(e, vec![(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 4, 1)]);
        let p = MonomialIdeal::minimalize(Ring::SymmetricSquarefree, 4, &[m(&[3, 4])]).unwrap();
        let e: Vec<_> = betti_s_eliahou_kervaire(&p).unwrap().entries().collect();
        assert_eq!(e, vec![(0, 0, 1), (1, 2, 1)]);
        let z = MonomialIdeal::zero(Ring::SymmetricSquarefree, 4);
        let e: Vec<_> = betti_s_eliahou_kervaire(&z).unwrap().entries().collect();
        assert_eq!(e, vec![(0, 0, 1)]);
    }

    #[test]
    fn auslander_buchsbaum_examples() {
        let t = betti_s_eliahou_kervaire(&not_cm(Ring::SymmetricSquarefree)).unwrap();
        assert_eq!(depth_s_via_auslander_buchsbaum(&t, 4).unwrap(), 2);
        let z = betti_s_eliahou_kervaire(&MonomialIdeal::zero(Ring::SymmetricSquarefree, 4)).unwrap();
        assert_eq!(depth_s_via_auslander_buchsbaum(&z, 4).unwrap(), 4);
        let p = MonomialIdeal::minimalize(Ring::SymmetricSquarefree, 4, &[m(&[3, 4])]).unwrap();
        let t = betti_s_eliahou_kervaire(&p).unwrap();
        assert_eq!(depth_s_via_auslander_buchsbaum(&t, 4).unwrap(), 3);
        assert_eq!(depth_s_via_auslander_buchsbaum(&BettiTable::new(), 4).unwrap_err(), Error::EmptyTable);
    }

    #[test]
    fn koszul_examples() {
        let f = PrimeField::default_field();
        let ideal = not_cm(Ring::SymmetricSquarefree);
        let k = koszul_betti_oracle(&ideal, &f, 4, 8).unwrap();
        assert_eq!(k, betti_s_eliahou_kervaire(&ideal).unwrap());
        let z = koszul_betti_oracle(&MonomialIdeal::zero(Ring::SymmetricSquarefree, 3), &f, 3, 6).unwrap();
        assert_eq!(z.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        let i = MonomialIdeal::minimalize(Ring::SymmetricSquarefree, 3, &[m(&[1, 2]), m(&[1, 3])]).unwrap();
        let k = koszul_betti_oracle(&i, &f, 3, 6).unwrap();
        assert_eq!(k.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
        let big = MonomialIdeal::zero(Ring::SymmetricSquarefree, 7);
        assert!(matches!(koszul_betti_oracle(&big, &f, 1, 1), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn koszul_general_ideal() {
        // (x2^2, x2x3, x3^2): resolution 1, 3 in degree 2, 2 in degree 3
        let f = PrimeField::default_field();
        let i = MonomialIdeal::minimalize_exponents(3, &[vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]).unwrap();
        let k = koszul_betti_oracle(&i, &f, 3, 8).unwrap();
        assert_eq!(k.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        let inv = stable_invariants(&i).unwrap();
        assert_eq!(inv.depth_s, Some(depth_s_via_auslander_buchsbaum(&k, 3).unwrap()));
        assert_eq!(inv.reg_s, k.regularity());
    }

    #[test]
    fn quotient_dim_examples() {
        let j = MonomialIdeal::minimalize(Ring::Exterior, 4, &[m(&[2, 3]), m(&[2, 4]), m(&[3, 4])]).unwrap();
        assert_eq!(quotient_dim_degree(&j, &[1, 2], 1), 2);
        assert_eq!(quotient_dim_degree(&j, &[1], 2), 0);
        assert_eq!(quotient_dim_degree(&j, &[], 0), 1);
        let s = MonomialIdeal::minimalize_exponents(3, &[vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]).unwrap();
        // degree 2 monomials of S/I: x1^2, x1x2, x1x3
        assert_eq!(quotient_dim_degree(&s, &[], 2), 3);
        assert_eq!(quotient_dim_degree(&s, &[1], 2), 0);
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(-1, -1), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-2, 1), 0);
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..=5).prop_flat_map(|n| {
            prop::collection::vec(1..(1u64 << n), 0..5)
                .prop_map(move |g| MonomialIdeal::minimalize(Ring::Exterior, n, &g).unwrap())
        })
    }

    proptest! {
        #[test]
        fn strongly_stable_implies_stable(j in arb_ideal()) {
            let f = stability_flags(&j);
            prop_assert!(!f.strongly_stable || f.stable);
        }

        #[test]
        fn quotient_dim_monotone_in_prefix(j in arb_ideal(), d in 0usize..4) {
            let n = j.n();
            let mut prev = quotient_dim_degree(&j, &[], d);
            let mut prefix = Vec::new();
            for v in (1..=n).rev() {
                prefix.push(v);
                let cur = quotient_dim_degree(&j, &prefix, d);
                prop_assert!(cur <= prev);
                prev = cur;
            }
        }

        #[test]
        fn generators_pairwise_nondividing(j in arb_ideal()) {
            for &a in j.masks() {
                for &b in j.masks() {
                    prop_assert!(a == b || a & !b != 0);
                }
            }
        }
    }
}
