//! Generic coordinate changes, initial ideals, generic initial ideals over
//! `E` and `S`, and exterior algebraic shifting.
//!
//! "Generic" is realized by random invertible matrices over a large prime
//! field. Every generic quantity is recomputed with `trials` independent
//! matrices and the results must coincide.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{lex_cmp_masks, subsets_of_size, ExteriorBases, Mask};
use crate::ideal::{stability_flags, MonomialIdeal, Ring};
use crate::linalg::{random_invertible, EchelonBasis, MatrixFp, PrimeField};
use crate::simplicial::SimplicialComplex;
use crate::symmetric::{Exponents, SymmetricBases};

/// Stream tags keeping the random draws of different computations apart.
pub mod purpose {
    pub const SHIFT_SPANS: u64 = 1;
    pub const GIN_E: u64 = 2;
    pub const GIN_S: u64 = 3;
    pub const ALPHA_E: u64 = 4;
    pub const ALPHA_S: u64 = 5;
    pub const CARTAN: u64 = 6;
    pub const PERMUTATION: u64 = 7;
    pub const BOUND: u64 = 8;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericContext {
    field: PrimeField,
    seed: u64,
    trials: usize,
}

impl GenericContext {
    pub fn new(field: PrimeField, seed: u64, trials: usize) -> Result<Self> {
        if trials < 2 {
            return Err(Error::GenericityFailure(format!("at least 2 trials are required, got {trials}")));
        }
        Ok(Self { field, seed, trials })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    /// Same field and trial count, different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..*self }
    }

    /// Deterministic stream for one trial of one computation.
    pub fn rng(&self, trial: usize, purpose: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream((purpose << 32) | trial as u64);
        rng
    }

    pub fn random_transform(&self, n: usize, trial: usize, purpose: u64) -> MatrixFp {
        random_invertible(n, &self.field, &mut self.rng(trial, purpose))
    }
}

/// A homogeneous element of `E` (or `S`) as a coefficient vector over the
/// degree basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub degree: usize,
    pub coeffs: Vec<u64>,
}

/// Rows spanning the degree-`d` component of an ideal; columns follow the
/// descending revlex basis of `E_d`.
#[derive(Clone, Debug)]
pub struct DegreeSpan {
    pub degree: usize,
    pub matrix: MatrixFp,
}

fn check_transform(gamma: &MatrixFp, n: usize, field: &PrimeField) -> Result<()> {
    if gamma.rows() != n || gamma.cols() != n {
        return Err(Error::AmbientMismatch { left: gamma.rows(), right: n });
    }
    if !gamma.is_invertible(field) {
        return Err(Error::SingularTransform);
    }
    Ok(())
}

/// `γ(e_A) = γ(e_{a_1}) ∧ ... ∧ γ(e_{a_k})` for every generator, where
/// `γ(e_j)` is column `j` of `γ`.
pub fn apply_transform(field: &PrimeField, bases: &ExteriorBases, gamma: &MatrixFp, ideal: &MonomialIdeal) -> Result<Vec<Homogeneous>> {
    if ideal.ring() != Ring::Exterior {
        return Err(Error::RingMismatch("apply_transform expects an exterior ideal".into()));
    }
    let n = ideal.n();
    check_transform(gamma, n, field)?;
    let columns: Vec<Vec<u64>> = (0..n).map(|j| gamma.column(j)).collect();
    Ok(ideal.masks().iter().map(|&a| wedge_of_columns(field, bases, &columns, a)).collect())
}

fn wedge_of_columns(field: &PrimeField, bases: &ExteriorBases, columns: &[Vec<u64>], a: Mask) -> Homogeneous {
    let mut v = vec![1u64];
    let mut d = 0;
    let mut rest = a;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        v = bases.wedge_linear_right(field, d, &v, &columns[k]);
        d += 1;
    }
    Homogeneous { degree: d, coeffs: v }
}

/// Rows `e_B ∧ g` for all generators `g` and monomials `e_B` of degree `d - deg g`.
pub fn ideal_degree_span(field: &PrimeField, bases: &ExteriorBases, gens: &[Homogeneous], d: usize) -> DegreeSpan {
    let cols = bases.dim(d);
    let mut rows = Vec::new();
    if d <= bases.n() {
        for g in gens.iter().filter(|g| g.degree <= d) {
            for &b in bases.basis(d - g.degree) {
                let row = bases.wedge_monomial_left(field, b, g.degree, &g.coeffs);
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    DegreeSpan { degree: d, matrix: MatrixFp::from_rows(cols, rows) }
}

/// Initial ideal for revlex: per degree, the pivot columns of the reduced
/// span name the leading monomials.
pub fn initial_ideal(field: &PrimeField, bases: &ExteriorBases, gens: &[Homogeneous], n: usize) -> Result<MonomialIdeal> {
    let mut leading = Vec::new();
    let Some(start) = gens.iter().map(|g| g.degree).min() else {
        return Ok(MonomialIdeal::zero(Ring::Exterior, n));
    };
    // rows of the reduced basis of the previous degree
    let mut prev: Vec<Vec<u64>> = Vec::new();
    for d in start..=n {
        let cols = bases.dim(d);
        let mut rows: Vec<Vec<u64>> = gens.iter().filter(|g| g.degree == d).map(|g| g.coeffs.clone()).collect();
        if d > 0 {
            for row in &prev {
                for k in 0..n {
                    let mut unit = vec![0u64; n];
                    unit[k] = 1;
                    let r = bases.wedge_linear_left(field, d - 1, &unit, row);
                    if r.iter().any(|&x| x != 0) {
                        rows.push(r);
                    }
                }
            }
        }
        let (reduced, pivots) = MatrixFp::from_rows(cols, rows).rref(field);
        leading.extend(pivots.iter().map(|&c| bases.basis(d)[c]));
        prev = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
    }
    MonomialIdeal::minimalize(Ring::Exterior, n, &leading)
}

/// `gin` with respect to revlex over `E`, checked across trials.
pub fn gin_rlex(ideal: &MonomialIdeal, ctx: &GenericContext) -> Result<MonomialIdeal> {
    if ideal.ring() != Ring::Exterior {
        return Err(Error::RingMismatch("use gin_rlex_symmetric for ideals of S".into()));
    }
    let n = ideal.n();
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let field = ctx.field();
    let bases = ExteriorBases::new(n);
    let mut result: Option<MonomialIdeal> = None;
    for t in 0..ctx.trials() {
        let gamma = ctx.random_transform(n, t, purpose::GIN_E);
        let gens = apply_transform(field, &bases, &gamma, ideal)?;
        let ini = initial_ideal(field, &bases, &gens, n)?;
        match &result {
            None => result = Some(ini),
            Some(r) if *r != ini => {
                return Err(Error::GenericityFailure(format!("gin trials disagree: {r} vs {ini}")));
            }
            Some(_) => {}
        }
    }
    let gin = result.expect("at least two trials");
    if !stability_flags(&gin).strongly_stable {
        return Err(Error::GenericityFailure(format!("gin {gin} is not strongly stable")));
    }
    Ok(gin)
}

/// `γ(x^u) = Π_j γ(x_j)^{u_j}` for every generator.
pub fn apply_transform_symmetric(field: &PrimeField, bases: &SymmetricBases, gamma: &MatrixFp, ideal: &MonomialIdeal) -> Result<Vec<Homogeneous>> {
    if !ideal.ring().is_symmetric() {
        return Err(Error::RingMismatch("apply_transform_symmetric expects an ideal of S".into()));
    }
    let n = ideal.n();
    check_transform(gamma, n, field)?;
    let columns: Vec<Vec<u64>> = (0..n).map(|j| gamma.column(j)).collect();
    Ok(ideal
        .exponent_generators()
        .iter()
        .map(|u| {
            let mut v = vec![1u64];
            let mut d = 0;
            for (j, &e) in u.iter().enumerate() {
                for _ in 0..e {
                    v = bases.mul_linear(field, d, &v, &columns[j]);
                    d += 1;
                }
            }
            Homogeneous { degree: d, coeffs: v }
        })
        .collect())
}

/// Initial ideal over `S` computed through degree `cap`.
pub fn initial_ideal_symmetric(field: &PrimeField, bases: &SymmetricBases, gens: &[Homogeneous], n: usize, cap: usize) -> Result<MonomialIdeal> {
    let mut leading: Vec<Exponents> = Vec::new();
    let mut prev: Vec<Vec<u64>> = Vec::new();
    let start = gens.iter().map(|g| g.degree).min().unwrap_or(cap + 1);
    for d in start..=cap {
        let cols = bases.dim(d);
        let mut rows: Vec<Vec<u64>> = gens.iter().filter(|g| g.degree == d).map(|g| g.coeffs.clone()).collect();
        for row in &prev {
            for k in 0..n {
                let mut unit = vec![0u64; n];
                unit[k] = 1;
                rows.push(bases.mul_linear(field, d - 1, row, &unit));
            }
        }
        let (reduced, pivots) = MatrixFp::from_rows(cols, rows).rref(field);
        leading.extend(pivots.iter().map(|&c| bases.basis(d)[c].clone()));
        prev = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
    }
    if leading.is_empty() {
        return Ok(MonomialIdeal::zero(Ring::SymmetricSquarefree, n));
    }
    MonomialIdeal::minimalize_exponents(n, &leading)
}

/// `gin` over `S` through degree `cap`, checked across trials.
pub fn gin_rlex_symmetric(ideal: &MonomialIdeal, ctx: &GenericContext, cap: usize) -> Result<MonomialIdeal> {
    if !ideal.ring().is_symmetric() {
        return Err(Error::RingMismatch("use gin_rlex for exterior ideals".into()));
    }
    let n = ideal.n();
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    if cap < ideal.max_generator_degree() {
        return Err(Error::IndexOutOfRange(format!("degree cap {cap} is below the generator degrees")));
    }
    let field = ctx.field();
    let bases = SymmetricBases::new(n, cap);
    let mut result: Option<MonomialIdeal> = None;
    for t in 0..ctx.trials() {
        let gamma = ctx.random_transform(n, t, purpose::GIN_S);
        let gens = apply_transform_symmetric(field, &bases, &gamma, ideal)?;
        let ini = initial_ideal_symmetric(field, &bases, &gens, n, cap)?;
        match &result {
            None => result = Some(ini),
            Some(r) if *r != ini => {
                return Err(Error::GenericityFailure(format!("gin trials disagree: {r} vs {ini}")));
            }
            Some(_) => {}
        }
    }
    let gin = result.expect("at least two trials");
    if !stability_flags(&gin).strongly_stable {
        return Err(Error::GenericityFailure(format!("gin {gin} is not strongly stable")));
    }
    Ok(gin)
}

/// Default degree cap for symmetric computations.
pub fn default_degree_cap(ideal: &MonomialIdeal) -> usize {
    ideal.max_generator_degree() + 1
}

/// Products `f_A` of the generic forms (rows of `a`) for every `|A| <= top`.
fn generic_products(field: &PrimeField, bases: &ExteriorBases, a: &MatrixFp, top: usize) -> HashMap<Mask, Vec<u64>> {
    let n = bases.n();
    let mut out: HashMap<Mask, Vec<u64>> = HashMap::new();
    out.insert(0, vec![1]);
    for d in 1..=top.min(n) {
        for s in subsets_of_size(n, d) {
            let hi = 63 - s.leading_zeros() as usize;
            let lower = &out[&(s & !(1u64 << hi))];
            let v = bases.wedge_linear_right(field, d - 1, lower, a.row(hi));
            out.insert(s, v);
        }
    }
    out
}

fn shift_once(delta: &SimplicialComplex, field: &PrimeField, bases: &ExteriorBases, a: &MatrixFp) -> Result<SimplicialComplex> {
    let n = delta.n();
    let top = (delta.dim() + 1) as usize;
    let products = generic_products(field, bases, a, top);
    let mut kept = vec![0u64];
    for i in 1..=top {
        let faces = delta.faces_of_size(i);
        let cols: Vec<usize> = faces.iter().map(|&f| bases.index_of(f)).collect();
        let mut echelon = EchelonBasis::new(*field, faces.len());
        let mut candidates = subsets_of_size(n, i);
        candidates.sort_by(|x, y| lex_cmp_masks(*x, *y));
        for s in candidates {
            if echelon.rank() == faces.len() {
                break;
            }
            let full = &products[&s];
            let row: Vec<u64> = cols.iter().map(|&c| full[c]).collect();
            if echelon.insert(row) {
                kept.push(s);
            }
        }
    }
    SimplicialComplex::from_masks(n, &kept)
}

fn require_full_support(delta: &SimplicialComplex) -> Result<()> {
    if delta.is_full_support() {
        Ok(())
    } else {
        Err(Error::NotFullSupport)
    }
}

/// `Δ^e` by the greedy rank construction on generic wedge products.
pub fn exterior_shift_spans(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<SimplicialComplex> {
    require_full_support(delta)?;
    let n = delta.n();
    let bases = ExteriorBases::new(n);
    let mut result: Option<SimplicialComplex> = None;
    for t in 0..ctx.trials() {
        let a = ctx.random_transform(n, t, purpose::SHIFT_SPANS);
        let s = shift_once(delta, ctx.field(), &bases, &a)?;
        match &result {
            None => result = Some(s),
            Some(r) if *r != s => {
                return Err(Error::GenericityFailure("shifting trials disagree".into()));
            }
            Some(_) => {}
        }
    }
    Ok(result.expect("at least two trials"))
}

/// Shifted complex together with `gin(J_Δ) = J_{Δ^e}`.
#[derive(Clone, Debug)]
pub struct Shifting {
    pub shifted: SimplicialComplex,
    pub gin: MonomialIdeal,
}

/// `Δ^e` by both routes (spans, and the complement of `gin(J_Δ)`), which
/// must agree; the result is checked to be shifted with the same f-vector.
pub fn exterior_shift_full(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<Shifting> {
    require_full_support(delta)?;
    let n = delta.n();
    let by_spans = exterior_shift_spans(delta, ctx)?;
    let j = MonomialIdeal::face_ideal(delta, Ring::Exterior);
    let gin = gin_rlex(&j, ctx)?;
    let by_gin = SimplicialComplex::from_nonfaces(n, gin.masks())?;
    if by_spans != by_gin {
        return Err(Error::ShiftMismatch(format!(
            "span route gives {} faces, gin route {} faces",
            by_spans.num_faces(),
            by_gin.num_faces()
        )));
    }
    if !by_spans.is_shifted() {
        return Err(Error::ShiftMismatch("result is not shifted".into()));
    }
    if by_spans.f_vector() != delta.f_vector() {
        return Err(Error::ShiftMismatch("f-vector changed".into()));
    }
    Ok(Shifting { shifted: by_spans, gin })
}

pub fn exterior_shift(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<SimplicialComplex> {
    exterior_shift_full(delta, ctx).map(|s| s.shifted)
}

/// Rank of each degree component `d = 0..=n` of the span of `gens`.
pub fn hilbert_ranks(field: &PrimeField, bases: &ExteriorBases, gens: &[Homogeneous]) -> Vec<usize> {
    (0..=bases.n()).map(|d| ideal_degree_span(field, bases, gens, d).matrix.rank(field)).collect()
}

/// Monomial generators as coefficient vectors (no transform).
pub fn monomial_generators(bases: &ExteriorBases, ideal: &MonomialIdeal) -> Vec<Homogeneous> {
    ideal
        .masks()
        .iter()
        .map(|&m| {
            let d = m.count_ones() as usize;
            let mut v = vec![0u64; bases.dim(d)];
            v[bases.index_of(m)] = 1;
            Homogeneous { degree: d, coeffs: v }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::mask_from_vertices;

    fn ctx() -> GenericContext {
        GenericContext::new(PrimeField::default_field(), 7, 2).unwrap()
    }

    fn m(vs: &[usize]) -> Mask {
        mask_from_vertices(12, vs).unwrap()
    }

    fn ext(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let masks: Vec<Mask> = gens.iter().map(|g| m(g)).collect();
        MonomialIdeal::minimalize(Ring::Exterior, n, &masks).unwrap()
    }

    fn complex(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = faces.iter().map(|x| x.to_vec()).collect();
        SimplicialComplex::closure_from_faces(n, &f).unwrap()
    }

    #[test]
    fn context_requires_two_trials() {
        assert!(GenericContext::new(PrimeField::default_field(), 1, 1).is_err());
    }

    #[test]
    fn transform_examples() {
        let f = PrimeField::default_field();
        let b2 = ExteriorBases::new(2);
        let j = ext(2, &[&[1]]);
        let id = apply_transform(&f, &b2, &MatrixFp::identity(2), &j).unwrap();
        assert_eq!(id, monomial_generators(&b2, &j));
        let swap = MatrixFp::from_rows(2, vec![vec![0, 1], vec![1, 0]]);
        let g = apply_transform(&f, &b2, &swap, &j).unwrap();
        assert_eq!(initial_ideal(&f, &b2, &g, 2).unwrap(), ext(2, &[&[2]]));
        let b3 = ExteriorBases::new(3);
        let gamma = ctx().random_transform(3, 0, 99);
        let g = apply_transform(&f, &b3, &gamma, &ext(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(g[0].coeffs.len(), 1);
        assert_ne!(g[0].coeffs[0], 0);
        let singular = MatrixFp::zeros(2, 2);
        assert_eq!(apply_transform(&f, &b2, &singular, &j).unwrap_err(), Error::SingularTransform);
    }

    #[test]
    fn minors_match_transform() {
        let f = PrimeField::default_field();
        let b = ExteriorBases::new(4);
        let gamma = ctx().random_transform(4, 0, 42);
        let a = m(&[1, 3]);
        let g = apply_transform(&f, &b, &gamma, &ext(4, &[&[1, 3]])).unwrap();
        for (k, &bm) in b.basis(2).iter().enumerate() {
            let rows: Vec<usize> = crate::exterior::vertices(bm).iter().map(|v| v - 1).collect();
            let cols: Vec<usize> = crate::exterior::vertices(a).iter().map(|v| v - 1).collect();
            let det = f.sub(
                f.mul(gamma.get(rows[0], cols[0]), gamma.get(rows[1], cols[1])),
                f.mul(gamma.get(rows[0], cols[1]), gamma.get(rows[1], cols[0])),
            );
            assert_eq!(g[0].coeffs[k], det);
        }
    }

    #[test]
    fn span_examples() {
        let f = PrimeField::default_field();
        let b = ExteriorBases::new(4);
        let gens = monomial_generators(&b, &ext(4, &[&[3, 4]]));
        let s = ideal_degree_span(&f, &b, &gens, 3);
        assert_eq!(s.matrix.rank(&f), 2);
        let s2 = ideal_degree_span(&f, &b, &gens, 2);
        assert_eq!(s2.matrix.rows(), 1);
        assert_eq!(ideal_degree_span(&f, &b, &gens, 5).matrix.rows(), 0);
    }

    #[test]
    fn initial_ideal_examples() {
        let f = PrimeField::default_field();
        let b = ExteriorBases::new(4);
        let j = ext(4, &[&[3, 4], &[1, 2, 4]]);
        assert_eq!(initial_ideal(&f, &b, &monomial_generators(&b, &j), 4).unwrap(), j);
        let b3 = ExteriorBases::new(3);
        let v = Homogeneous { degree: 1, coeffs: vec![5, 6, 7] };
        assert_eq!(initial_ideal(&f, &b3, &[v], 3).unwrap(), ext(3, &[&[3]]));
    }

    #[test]
    fn gin_examples() {
        let j = ext(4, &[&[3, 4], &[1, 2, 4]]);
        assert_eq!(gin_rlex(&j, &ctx()).unwrap(), j);
        let top = ext(3, &[&[1, 2, 3]]);
        assert_eq!(gin_rlex(&top, &ctx()).unwrap(), top);
        let path = complex(3, &[&[1, 3], &[2, 3]]);
        let jp = MonomialIdeal::face_ideal(&path, Ring::Exterior);
        let expected = MonomialIdeal::face_ideal(&complex(3, &[&[1, 2], &[1, 3]]), Ring::Exterior);
        assert_eq!(gin_rlex(&jp, &ctx()).unwrap(), expected);
    }

    #[test]
    fn gin_is_idempotent_and_preserves_hilbert_function() {
        let f = PrimeField::default_field();
        let b = ExteriorBases::new(5);
        for gens in [vec![m(&[1, 2]), m(&[3, 4, 5])], vec![m(&[1, 5]), m(&[2, 3])], vec![m(&[1]), m(&[2, 4, 5])]] {
            let j = MonomialIdeal::minimalize(Ring::Exterior, 5, &gens).unwrap();
            let g = gin_rlex(&j, &ctx()).unwrap();
            assert_eq!(gin_rlex(&g, &ctx().with_seed(99)).unwrap(), g);
            let gamma = ctx().random_transform(5, 0, 1234);
            let image = apply_transform(&f, &b, &gamma, &j).unwrap();
            assert_eq!(hilbert_ranks(&f, &b, &image), hilbert_ranks(&f, &b, &monomial_generators(&b, &g)));
        }
    }

    #[test]
    fn symmetric_gin() {
        let c = ctx();
        // strongly stable fixed point
        let i = MonomialIdeal::minimalize_exponents(3, &[vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]).unwrap();
        assert_eq!(gin_rlex_symmetric(&i, &c, 3).unwrap(), i);
        // gin of (x1^2) is (x3^2)
        let p = MonomialIdeal::minimalize_exponents(3, &[vec![2, 0, 0]]).unwrap();
        let g = gin_rlex_symmetric(&p, &c, 3).unwrap();
        assert_eq!(g.exponent_generators(), vec![vec![0, 0, 2]]);
        // gin of (x1 x2) in two variables is (x2^2)
        let q = MonomialIdeal::minimalize_exponents(2, &[vec![1, 1]]).unwrap();
        assert_eq!(gin_rlex_symmetric(&q, &c, 3).unwrap().exponent_generators(), vec![vec![0, 2]]);
        // complete intersection of two quadrics: (x2^2, x1x2, x1^3)
        let ci = MonomialIdeal::minimalize_exponents(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        let g = gin_rlex_symmetric(&ci, &c, 4).unwrap();
        let mut gens = g.exponent_generators();
        gens.sort();
        assert_eq!(gens, vec![vec![0, 2], vec![1, 1], vec![3, 0]]);
        for d in 0..=4 {
            assert_eq!(
                crate::ideal::quotient_dim_degree(&g, &[], d),
                crate::ideal::quotient_dim_degree(&ci, &[], d),
            );
        }
    }

    #[test]
    fn shifting_examples() {
        let c = ctx();
        let not_cm = complex(4, &[&[1, 2, 3], &[1, 4], &[2, 4]]);
        assert_eq!(exterior_shift(&not_cm, &c).unwrap(), not_cm);
        let path = complex(3, &[&[1, 3], &[2, 3]]);
        let shifted = exterior_shift(&path, &c).unwrap();
        assert_eq!(shifted, complex(3, &[&[1, 2], &[1, 3]]));
        assert_eq!(exterior_shift_spans(&path, &c).unwrap(), shifted);
        let hollow = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(exterior_shift(&hollow, &c).unwrap(), hollow);
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(exterior_shift(&simplex, &c).unwrap(), simplex);
        let partial = complex(3, &[&[1, 2]]);
        assert_eq!(exterior_shift(&partial, &c).unwrap_err(), Error::NotFullSupport);
    }

    #[test]
    fn shifting_a_cycle() {
        // the 5-cycle shifts to the complex with edges 12,13,14,15,23
        let c = ctx();
        let cycle = complex(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let s = exterior_shift(&cycle, &c).unwrap();
        assert_eq!(s, complex(5, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3]]));
    }
}
