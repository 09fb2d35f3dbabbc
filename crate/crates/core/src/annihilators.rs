//! Annihilator numbers over `E` and `S`, their combinatorial descriptions
//! and the checks built on them.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{agree_on, generic_cartan_complexes, CartanLimits};
use crate::error::{Error, Result};
use crate::exterior::{full_mask, set_string, subsets_of_size, vertex_bit, vertices, wedge_sign, Mask};
use crate::generic::{exterior_shift, exterior_shift_full, gin_rlex, gin_rlex_symmetric, purpose, GenericContext};
use crate::ideal::{
    betti_s_eliahou_kervaire, binomial, depth_s_via_auslander_buchsbaum, quotient_dim_degree, stable_invariants, stability_flags,
    BettiTable, MonomialIdeal, Ring,
};
use crate::linalg::{EchelonBasis, MatrixFp, PrimeField, QuotientSpace};
use crate::simplicial::SimplicialComplex;
use crate::symmetric::{self, Exponents};

/// Largest `n` for exterior annihilator tables.
pub const ALPHA_MAX_N: usize = 16;

/// Sparse `α_{i,j}`; symmetric tables also carry row `n + 1` (`β_{0,j}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorTable {
    ring: Ring,
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl AnnihilatorTable {
    pub fn new(ring: Ring, n: usize) -> Self {
        Self { ring, n, entries: BTreeMap::new() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        !self.entries.keys().any(|&(r, _)| r == i)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_j(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, j)| j).max()
    }
}

impl Serialize for AnnihilatorTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AnnihilatorTable", 3)?;
        st.serialize_field("ring", &self.ring.to_string())?;
        st.serialize_field("n", &self.n)?;
        let triples: Vec<[u64; 3]> = self.entries().map(|(i, j, v)| [i as u64, j as u64, v]).collect();
        st.serialize_field("entries", &triples)?;
        st.end()
    }
}

/// The ordered basis `v_1..v_n` of the degree one part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `v_k = e_{σ(k)}`, values 1-based.
    StandardPermutation(Vec<usize>),
    /// `v_k` is column `k` of the matrix.
    TransformColumns(MatrixFp),
}

impl SequenceSpec {
    pub fn identity(n: usize) -> Self {
        Self::StandardPermutation((1..=n).collect())
    }

    /// `e_1, .., e_{i-2}, e_i, e_{i-1}, e_{i+1}, ..`
    pub fn swapped(n: usize, i: usize) -> Result<Self> {
        if i < 2 || i > n {
            return Err(Error::IndexOutOfRange(format!("cannot swap positions {} and {i} in 1..={n}", i.wrapping_sub(1))));
        }
        let mut sigma: Vec<usize> = (1..=n).collect();
        sigma.swap(i - 2, i - 1);
        Ok(Self::StandardPermutation(sigma))
    }

    /// Checks the sequence is a basis of the degree one part.
    pub fn validate(&self, n: usize, field: &PrimeField) -> Result<()> {
        match self {
            Self::StandardPermutation(sigma) => {
                let mut seen = vec![false; n + 1];
                if sigma.len() != n {
                    return Err(Error::IndexOutOfRange(format!("permutation of length {} on [{n}]", sigma.len())));
                }
                for &v in sigma {
                    if v == 0 || v > n || seen[v] {
                        return Err(Error::IndexOutOfRange(format!("{sigma:?} is not a permutation of [{n}]")));
                    }
                    seen[v] = true;
                }
                Ok(())
            }
            Self::TransformColumns(g) => {
                if g.rows() != n || g.cols() != n {
                    return Err(Error::AmbientMismatch { left: g.rows(), right: n });
                }
                if !g.is_invertible(field) {
                    return Err(Error::SingularTransform);
                }
                Ok(())
            }
        }
    }

    /// Coefficient vectors of `v_1..v_n`.
    pub fn forms(&self, n: usize) -> Vec<Vec<u64>> {
        match self {
            Self::StandardPermutation(sigma) => sigma.iter().map(|&v| (1..=n).map(|c| u64::from(c == v)).collect()).collect(),
            Self::TransformColumns(g) => (0..n).map(|k| g.column(k)).collect(),
        }
    }
}

/// Standard monomials of `E/J` with the matrices of `v_k ∧ -` between them.
struct ExteriorSequenceData {
    field: PrimeField,
    n: usize,
    dims: Vec<usize>,
    // images[k][d][b]: v_k ∧ (b-th standard monomial of degree d), in degree d + 1 coordinates
    images: Vec<Vec<Vec<Vec<u64>>>>,
}

impl ExteriorSequenceData {
    fn new(ideal: &MonomialIdeal, forms: &[Vec<u64>], field: &PrimeField) -> Self {
        let n = ideal.n();
        let member = ideal.membership_table();
        let standard: Vec<Vec<Mask>> =
            (0..=n).map(|d| subsets_of_size(n, d).into_iter().filter(|&m| !member[m as usize]).collect()).collect();
        let position: Vec<HashMap<Mask, usize>> =
            standard.iter().map(|s| s.iter().enumerate().map(|(k, &m)| (m, k)).collect()).collect();
        let mut images = Vec::with_capacity(forms.len());
        for v in forms {
            let mut per_degree = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let target = if d < n { standard[d + 1].len() } else { 0 };
                let mut rows = Vec::with_capacity(standard[d].len());
                for &b in &standard[d] {
                    let mut out = vec![0u64; target];
                    if d == n {
                        rows.push(out);
                        continue;
                    }
                    for (k, &c) in v.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let bit = vertex_bit(k + 1);
                        let Some(negative) = wedge_sign(bit, b) else { continue };
                        if let Some(&pos) = position[d + 1].get(&(b | bit)) {
                            let x = if negative { field.neg(c) } else { c };
                            out[pos] = field.add(out[pos], x);
                        }
                    }
                    rows.push(out);
                }
                per_degree.push(rows);
            }
            images.push(per_degree);
        }
        let dims = standard.iter().map(Vec::len).collect();
        Self { field: *field, n, dims, images }
    }

    /// `D[l][d] = dim (E/(J + (v_1..v_l)))_d` by span ranks, `d <= n + 1`.
    fn prefix_dims(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = vec![vec![0usize; n + 2]; n + 1];
        for d in 0..=n {
            let mut eb = EchelonBasis::new(self.field, self.dims[d]);
            out[0][d] = self.dims[d];
            for l in 1..=n {
                if d > 0 {
                    for row in &self.images[l - 1][d - 1] {
                        eb.insert(row.clone());
                    }
                }
                out[l][d] = self.dims[d] - eb.rank();
            }
        }
        out
    }

    /// `dim H^j(M, v_i)` with `M = E/(J + (v_1..v_{i-1}))`, for all `j`.
    fn homology_row(&self, i: usize) -> Vec<usize> {
        let n = self.n;
        let spaces: Vec<QuotientSpace> = (0..=n)
            .map(|d| {
                let rows: Vec<Vec<u64>> =
                    if d == 0 { Vec::new() } else { (0..i - 1).flat_map(|k| self.images[k][d - 1].iter().cloned()).collect() };
                QuotientSpace::new(self.field, &MatrixFp::from_rows(self.dims[d], rows))
            })
            .collect();
        // rank of v_i: M_d -> M_{d+1}
        let ranks: Vec<usize> = (0..=n)
            .map(|d| {
                if d == n {
                    return 0;
                }
                let rows: Vec<Vec<u64>> =
                    spaces[d].standard_columns().iter().map(|&c| spaces[d + 1].normal_form(&self.images[i - 1][d][c])).collect();
                MatrixFp::from_rows(spaces[d + 1].dim(), rows).rank(&self.field)
            })
            .collect();
        (0..=n).map(|j| spaces[j].dim() - ranks[j] - if j > 0 { ranks[j - 1] } else { 0 }).collect()
    }
}

fn require_exterior(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.ring() != Ring::Exterior {
        return Err(Error::RingMismatch(format!("expected an exterior ideal, got {}", ideal.ring())));
    }
    if ideal.n() > ALPHA_MAX_N {
        return Err(Error::SizeLimit(format!("annihilator tables need n <= {ALPHA_MAX_N}")));
    }
    Ok(())
}

/// All `α_{i,j}(v; E/J)`, `1 <= i <= n`, `0 <= j <= n`, by dimension
/// arithmetic and by the homology of `(M, v_i)`; the two must agree.
pub fn alpha_e_table_for_sequence(ideal: &MonomialIdeal, seq: &SequenceSpec, field: &PrimeField) -> Result<AnnihilatorTable> {
    require_exterior(ideal)?;
    let n = ideal.n();
    seq.validate(n, field)?;
    let data = ExteriorSequenceData::new(ideal, &seq.forms(n), field);
    let dims = match seq {
        SequenceSpec::StandardPermutation(sigma) => (0..=n)
            .map(|l| (0..=n + 1).map(|d| if d > n { 0 } else { quotient_dim_degree(ideal, &sigma[..l], d) }).collect())
            .collect(),
        SequenceSpec::TransformColumns(_) => data.prefix_dims(),
    };
    let mut table = AnnihilatorTable::new(Ring::Exterior, n);
    for i in 1..=n {
        let homology = data.homology_row(i);
        for j in 0..=n {
            let a = dims[i][j] as i64 - (dims[i - 1][j + 1] as i64 - dims[i][j + 1] as i64);
            if a < 0 || a as usize != homology[j] {
                return Err(Error::ConsistencyFailure(format!(
                    "α_{{{i},{j}}}: dimension count {a}, homology {}",
                    homology[j]
                )));
            }
            table.set(i, j, a as u64);
        }
    }
    Ok(table)
}

/// `α_{i,j}(v_1..v_n; E/J)`.
pub fn alpha_e_sequence(ideal: &MonomialIdeal, seq: &SequenceSpec, i: usize, j: usize, field: &PrimeField) -> Result<u64> {
    let n = ideal.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} outside 1..={n}")));
    }
    if j > n {
        return Ok(0);
    }
    Ok(alpha_e_table_for_sequence(ideal, seq, field)?.get(i, j))
}

/// Generic annihilator numbers from `gin(J)`, rechecked on `J` itself with
/// random transforms in every trial.
pub fn alpha_e_generic(ideal: &MonomialIdeal, ctx: &GenericContext) -> Result<AnnihilatorTable> {
    require_exterior(ideal)?;
    let gin = gin_rlex(ideal, ctx)?;
    alpha_e_generic_with_gin(ideal, &gin, ctx)
}

/// As [`alpha_e_generic`] with `gin(J)` already known.
pub fn alpha_e_generic_with_gin(ideal: &MonomialIdeal, gin: &MonomialIdeal, ctx: &GenericContext) -> Result<AnnihilatorTable> {
    let n = ideal.n();
    let table = alpha_e_table_for_sequence(gin, &SequenceSpec::identity(n), ctx.field())?;
    for t in 0..ctx.trials() {
        let gamma = ctx.random_transform(n, t, purpose::ALPHA_E);
        let other = alpha_e_table_for_sequence(ideal, &SequenceSpec::TransformColumns(gamma), ctx.field())?;
        if other != table {
            return Err(Error::GenericityFailure(format!("trial {t}: random sequence disagrees with gin coordinates")));
        }
    }
    Ok(table)
}

/// `#{F : |F| = j, min F >= i+1, e_F ∉ gin, e_i e_F ∈ gin}`.
pub fn alpha_from_standard_monomials(gin: &MonomialIdeal, i: usize, j: usize) -> Result<u64> {
    require_exterior(gin)?;
    if !stability_flags(gin).strongly_stable {
        return Err(Error::StabilityViolation(format!("{gin} is not strongly stable")));
    }
    let n = gin.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} outside 1..={n}")));
    }
    Ok(count_standard(gin, i, j))
}

fn count_standard(gin: &MonomialIdeal, i: usize, j: usize) -> u64 {
    let n = gin.n();
    if j > n {
        return 0;
    }
    let low = full_mask(i);
    subsets_of_size(n, j)
        .into_iter()
        .filter(|&f| f & low == 0 && !gin.contains_mask(f) && gin.contains_mask(f | vertex_bit(i)))
        .count() as u64
}

pub fn alpha_table_from_standard_monomials(gin: &MonomialIdeal) -> Result<AnnihilatorTable> {
    alpha_from_standard_monomials(gin, 1, 0)?;
    let n = gin.n();
    let mut t = AnnihilatorTable::new(Ring::Exterior, n);
    for i in 1..=n {
        for j in 0..=n {
            t.set(i, j, count_standard(gin, i, j));
        }
    }
    Ok(t)
}

/// `#{F ∈ Δ^e : |F| = j, F ∩ [i] = ∅, F ∪ {i} ∉ Δ^e}` for a shifted complex.
pub fn alpha_from_shifted(shifted: &SimplicialComplex) -> AnnihilatorTable {
    let n = shifted.n();
    let mut t = AnnihilatorTable::new(Ring::Exterior, n);
    for i in 1..=n {
        let low = full_mask(i);
        for j in 0..=n {
            let c = shifted.faces_of_size(j).iter().filter(|&&f| f & low == 0 && !shifted.contains(f | vertex_bit(i))).count();
            t.set(i, j, c as u64);
        }
    }
    t
}

pub fn alpha_complex(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<AnnihilatorTable> {
    if !delta.is_full_support() {
        return Err(Error::NotFullSupport);
    }
    Ok(alpha_from_shifted(&exterior_shift(delta, ctx)?))
}

/// Largest `r` such that rows `1..=r` vanish.
pub fn depth_from_alpha(table: &AnnihilatorTable, n: usize) -> usize {
    (1..=n).find(|&i| !table.row_is_zero(i)).map_or(n, |i| i - 1)
}

/// `β_{i,i+j} = Σ_l C(n-l-j, i-1) α_{l,j}` for `i >= 1`, with `β_{0,0} = 1`.
pub fn betti_s_from_alpha_table(alpha: &AnnihilatorTable) -> BettiTable {
    let n = alpha.n();
    let mut t = BettiTable::new();
    t.set(0, 0, 1);
    for (l, j, a) in alpha.entries() {
        for i in 1..=n {
            let c = binomial(n as i64 - l as i64 - j as i64, i as i64 - 1);
            if c > 0 {
                t.add(i, i + j, c * a);
            }
        }
    }
    t
}

/// `β^S(K[Δ^e])` from the annihilator numbers, checked against the
/// Eliahou–Kervaire table of `I_{Δ^e}`.
pub fn betti_s_from_alpha(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<BettiTable> {
    if !delta.is_full_support() {
        return Err(Error::NotFullSupport);
    }
    let shifted = exterior_shift(delta, ctx)?;
    betti_s_from_alpha_shifted(&shifted)
}

pub fn betti_s_from_alpha_shifted(shifted: &SimplicialComplex) -> Result<BettiTable> {
    let table = betti_s_from_alpha_table(&alpha_from_shifted(shifted));
    let ek = betti_s_eliahou_kervaire(&MonomialIdeal::face_ideal(shifted, Ring::SymmetricSquarefree))?;
    if table != ek {
        return Err(Error::ConsistencyFailure("β^S from annihilator numbers differs from the Eliahou–Kervaire table".into()));
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub h: u64,
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub equality_everywhere: bool,
}

/// `h_{i,i+j}(r) <= Σ_{k=1}^r C(r+i-k-1, i-1) α_{k,j}`; a violation is an error.
pub fn cartan_betti_bound_check(
    ideal: &MonomialIdeal,
    ctx: &GenericContext,
    i_max: usize,
    j_max: usize,
    r_range: RangeInclusive<usize>,
) -> Result<BoundReport> {
    let alpha = alpha_e_generic(ideal, ctx)?;
    cartan_betti_bound_with_alpha(ideal, &alpha, ctx, i_max, j_max, r_range, CartanLimits::default())
}

pub fn cartan_betti_bound_with_alpha(
    ideal: &MonomialIdeal,
    alpha: &AnnihilatorTable,
    ctx: &GenericContext,
    i_max: usize,
    j_max: usize,
    r_range: RangeInclusive<usize>,
    limits: CartanLimits,
) -> Result<BoundReport> {
    let n = ideal.n();
    let mut entries = Vec::new();
    for r in r_range {
        if r == 0 || r > n {
            return Err(Error::IndexOutOfRange(format!("r = {r} outside 1..={n}")));
        }
        let mut complexes = generic_cartan_complexes(ideal, ctx, r, purpose::BOUND, limits)?;
        for i in 1..=i_max {
            for j in 0..=j_max {
                let h = agree_on(&mut complexes, |c| c.homology_dim(i, i + j))? as u64;
                let bound: u64 =
                    (1..=r).map(|k| binomial((r + i - k) as i64 - 1, i as i64 - 1) * alpha.get(k, j)).sum();
                if h > bound {
                    return Err(Error::VerificationFailure(format!(
                        "Cartan–Betti bound violated at i={i}, j={j}, r={r}: h = {h} > {bound}"
                    )));
                }
                entries.push(BoundEntry { i, j, r, h, bound });
            }
        }
    }
    let equality_everywhere = entries.iter().all(|e| e.h == e.bound);
    Ok(BoundReport { entries, equality_everywhere })
}

/// Standard monomials of `S/I` up to a degree, with `v_k · -` between them.
struct SymmetricSequenceData {
    field: PrimeField,
    dims: Vec<usize>,
    images: Vec<Vec<Vec<Vec<u64>>>>,
}

impl SymmetricSequenceData {
    fn new(ideal: &MonomialIdeal, forms: &[Vec<u64>], top: usize, field: &PrimeField) -> Self {
        let n = ideal.n();
        let standard: Vec<Vec<Exponents>> = (0..=top)
            .map(|d| symmetric::monomials_of_degree(n, d).into_iter().filter(|u| !ideal.contains_exponents(u)).collect())
            .collect();
        let position: Vec<HashMap<Exponents, usize>> =
            standard.iter().map(|s| s.iter().enumerate().map(|(k, u)| (u.clone(), k)).collect()).collect();
        let mut images = Vec::with_capacity(forms.len());
        for v in forms {
            let mut per_degree = Vec::with_capacity(top);
            for d in 0..top {
                let mut rows = Vec::with_capacity(standard[d].len());
                for u in &standard[d] {
                    let mut out = vec![0u64; standard[d + 1].len()];
                    let mut w = u.clone();
                    for (k, &c) in v.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        w[k] += 1;
                        if let Some(&pos) = position[d + 1].get(&w) {
                            out[pos] = field.add(out[pos], c);
                        }
                        w[k] -= 1;
                    }
                    rows.push(out);
                }
                per_degree.push(rows);
            }
            images.push(per_degree);
        }
        Self { field: *field, dims: standard.iter().map(Vec::len).collect(), images }
    }

    fn prefix_dim(&self, l: usize, d: usize) -> usize {
        if d == 0 || l == 0 {
            return self.dims[d];
        }
        let mut eb = EchelonBasis::new(self.field, self.dims[d]);
        for k in 0..l {
            for row in &self.images[k][d - 1] {
                eb.insert(row.clone());
            }
        }
        self.dims[d] - eb.rank()
    }
}

fn require_symmetric(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.ring().is_symmetric() {
        return Err(Error::RingMismatch(format!("expected an ideal of S, got {}", ideal.ring())));
    }
    Ok(())
}

/// `α_{i,j}(v; S/I) = dim M_j - (dim M_{j+1} - dim (M/v_i M)_{j+1})` with
/// `M = S/(I + (v_1..v_{i-1}))`; `i = n + 1` gives `β_{0,j}(S/I)`.
pub fn alpha_s_sequence(ideal: &MonomialIdeal, seq: &SequenceSpec, i: usize, j: usize, degree_cap: usize, field: &PrimeField) -> Result<u64> {
    require_symmetric(ideal)?;
    let n = ideal.n();
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange(format!("i = {i} outside 1..={}", n + 1)));
    }
    if j > degree_cap {
        return Err(Error::IndexOutOfRange(format!("degree {j} above the cap {degree_cap}")));
    }
    if i == n + 1 {
        return Ok(u64::from(j == 0));
    }
    seq.validate(n, field)?;
    let dims = |l: usize, d: usize| -> usize {
        match seq {
            SequenceSpec::StandardPermutation(sigma) => quotient_dim_degree(ideal, &sigma[..l], d),
            SequenceSpec::TransformColumns(_) => unreachable!(),
        }
    };
    let a = match seq {
        SequenceSpec::StandardPermutation(_) => dims(i - 1, j) as i64 - dims(i - 1, j + 1) as i64 + dims(i, j + 1) as i64,
        SequenceSpec::TransformColumns(_) => {
            let data = SymmetricSequenceData::new(ideal, &seq.forms(n), j + 1, field);
            data.prefix_dim(i - 1, j) as i64 - data.prefix_dim(i - 1, j + 1) as i64 + data.prefix_dim(i, j + 1) as i64
        }
    };
    u64::try_from(a).map_err(|_| Error::ConsistencyFailure(format!("negative α_{{{i},{j}}} = {a}")))
}

/// Full table `1 <= i <= n + 1`, `0 <= j <= cap` for one sequence.
pub fn alpha_s_table_for_sequence(ideal: &MonomialIdeal, seq: &SequenceSpec, degree_cap: usize, field: &PrimeField) -> Result<AnnihilatorTable> {
    require_symmetric(ideal)?;
    let n = ideal.n();
    seq.validate(n, field)?;
    let mut t = AnnihilatorTable::new(ideal.ring(), n);
    match seq {
        SequenceSpec::StandardPermutation(_) => {
            for i in 1..=n + 1 {
                for j in 0..=degree_cap {
                    t.set(i, j, alpha_s_sequence(ideal, seq, i, j, degree_cap, field)?);
                }
            }
        }
        SequenceSpec::TransformColumns(_) => {
            let data = SymmetricSequenceData::new(ideal, &seq.forms(n), degree_cap + 1, field);
            let mut dims = vec![vec![0usize; degree_cap + 2]; n + 1];
            for d in 0..=degree_cap + 1 {
                let mut eb = EchelonBasis::new(data.field, data.dims[d]);
                dims[0][d] = data.dims[d];
                for l in 1..=n {
                    if d > 0 {
                        for row in &data.images[l - 1][d - 1] {
                            eb.insert(row.clone());
                        }
                    }
                    dims[l][d] = data.dims[d] - eb.rank();
                }
            }
            for i in 1..=n {
                for j in 0..=degree_cap {
                    let a = dims[i - 1][j] as i64 - dims[i - 1][j + 1] as i64 + dims[i][j + 1] as i64;
                    let a = u64::try_from(a).map_err(|_| Error::ConsistencyFailure(format!("negative α_{{{i},{j}}}")))?;
                    t.set(i, j, a);
                }
            }
            t.set(n + 1, 0, 1);
        }
    }
    Ok(t)
}

/// Generic symmetric annihilator numbers from `gin(I)` up to the degree cap,
/// rechecked on `I` with random transforms in every trial.
pub fn alpha_s_generic(ideal: &MonomialIdeal, ctx: &GenericContext, degree_cap: usize) -> Result<AnnihilatorTable> {
    require_symmetric(ideal)?;
    if degree_cap < ideal.max_generator_degree() {
        return Err(Error::IndexOutOfRange(format!(
            "degree cap {degree_cap} below the generator degree {}",
            ideal.max_generator_degree()
        )));
    }
    let n = ideal.n();
    let gin = gin_rlex_symmetric(ideal, ctx, degree_cap + 1)?;
    let table = alpha_s_table_for_sequence(&gin, &SequenceSpec::identity(n), degree_cap, ctx.field())?;
    for t in 0..ctx.trials() {
        let gamma = ctx.random_transform(n, t, purpose::ALPHA_S);
        let mut other = alpha_s_table_for_sequence(ideal, &SequenceSpec::TransformColumns(gamma), degree_cap, ctx.field())?;
        other.ring = table.ring;
        if other != table {
            return Err(Error::GenericityFailure(format!("trial {t}: random sequence disagrees with gin coordinates")));
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub ring: String,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub generators: Vec<String>,
    pub generic_alpha_ij: u64,
    pub swapped_alpha_ij: u64,
    pub generic_alpha_prev: u64,
    pub swapped_alpha_prev: u64,
    pub strict: bool,
}

impl CounterexampleReport {
    fn check(self) -> Result<Self> {
        if self.strict {
            Ok(self)
        } else {
            Err(Error::VerificationFailure(format!(
                "{} counterexample (n,i,j) = ({},{},{}): generic ({}, {}) vs swapped ({}, {})",
                self.ring, self.n, self.i, self.j, self.generic_alpha_ij, self.generic_alpha_prev, self.swapped_alpha_ij,
                self.swapped_alpha_prev
            )))
        }
    }
}

pub fn counterexample_e_feasible(n: usize, i: usize, j: usize) -> bool {
    i >= 2 && j >= 1 && i + j <= n && n <= ALPHA_MAX_N
}

/// `J = (e_F : F ⊆ {i..n}, |F| = j + 1)`.
pub fn counterexample_e_ideal(n: usize, i: usize, j: usize) -> Result<MonomialIdeal> {
    if !counterexample_e_feasible(n, i, j) {
        return Err(Error::ParameterInfeasible(format!("(n,i,j) = ({n},{i},{j}) needs 2 <= i, 1 <= j, i + j <= n")));
    }
    let low = full_mask(i - 1);
    let gens: Vec<Mask> = subsets_of_size(n, j + 1).into_iter().filter(|&f| f & low == 0).collect();
    MonomialIdeal::minimalize(Ring::Exterior, n, &gens)
}

pub fn counterexample_e(n: usize, i: usize, j: usize, ctx: &GenericContext) -> Result<CounterexampleReport> {
    let ideal = counterexample_e_ideal(n, i, j)?;
    let generic = alpha_e_generic(&ideal, ctx)?;
    let swapped = alpha_e_table_for_sequence(&ideal, &SequenceSpec::swapped(n, i)?, ctx.field())?;
    counterexample_report(&ideal, n, i, j, &generic, &swapped).check()
}

pub fn counterexample_s_feasible(n: usize, i: usize, j: usize) -> bool {
    (2..=n).contains(&i) && j >= 1
}

/// `I = (x^u : deg u = j + 1, supp u ⊆ {i..n})`.
pub fn counterexample_s_ideal(n: usize, i: usize, j: usize) -> Result<MonomialIdeal> {
    if !counterexample_s_feasible(n, i, j) {
        return Err(Error::ParameterInfeasible(format!("(n,i,j) = ({n},{i},{j}) needs 2 <= i <= n and j >= 1")));
    }
    let gens: Vec<Exponents> = symmetric::monomials_of_degree(n - i + 1, j + 1)
        .into_iter()
        .map(|w| {
            let mut u = vec![0u32; i - 1];
            u.extend(w);
            u
        })
        .collect();
    MonomialIdeal::minimalize_exponents(n, &gens)
}

pub fn counterexample_s(n: usize, i: usize, j: usize, ctx: &GenericContext) -> Result<CounterexampleReport> {
    let ideal = counterexample_s_ideal(n, i, j)?;
    let cap = j + 1;
    let generic = alpha_s_generic(&ideal, ctx, cap)?;
    let swapped = alpha_s_table_for_sequence(&ideal, &SequenceSpec::swapped(n, i)?, cap, ctx.field())?;
    counterexample_report(&ideal, n, i, j, &generic, &swapped).check()
}

fn counterexample_report(
    ideal: &MonomialIdeal,
    n: usize,
    i: usize,
    j: usize,
    generic: &AnnihilatorTable,
    swapped: &AnnihilatorTable,
) -> CounterexampleReport {
    let (g, s) = (generic.get(i, j), swapped.get(i, j));
    let (gp, sp) = (generic.get(i - 1, j), swapped.get(i - 1, j));
    CounterexampleReport {
        ring: ideal.ring().to_string(),
        n,
        i,
        j,
        generators: ideal.generator_strings(),
        generic_alpha_ij: g,
        swapped_alpha_ij: s,
        generic_alpha_prev: gp,
        swapped_alpha_prev: sp,
        strict: g > s && gp < sp,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationReport {
    pub n: usize,
    pub permutations: usize,
    pub identical: bool,
    pub note: String,
}

/// Default `n_cap` for the permutation check.
pub const PERMUTATION_MAX_N: usize = 5;

/// Every reordering of one generic sequence gives the generic table.
pub fn permutation_invariance_check(ideal: &MonomialIdeal, ctx: &GenericContext, n_cap: usize) -> Result<PermutationReport> {
    let reference = alpha_e_generic(ideal, ctx)?;
    permutation_invariance_with_reference(ideal, &reference, ctx, n_cap)
}

pub fn permutation_invariance_with_reference(
    ideal: &MonomialIdeal,
    reference: &AnnihilatorTable,
    ctx: &GenericContext,
    n_cap: usize,
) -> Result<PermutationReport> {
    require_exterior(ideal)?;
    let n = ideal.n();
    if n > n_cap {
        return Err(Error::SizeLimit(format!("n = {n} exceeds the permutation cap {n_cap}")));
    }
    let gamma = ctx.random_transform(n, 0, purpose::PERMUTATION);
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        let mut g = MatrixFp::zeros(n, n);
        for (k, &s) in sigma.iter().enumerate() {
            for row in 0..n {
                g.set(row, k, gamma.get(row, s));
            }
        }
        let table = alpha_e_table_for_sequence(ideal, &SequenceSpec::TransformColumns(g), ctx.field())?;
        count += 1;
        if &table != reference {
            let one_based: Vec<usize> = sigma.iter().map(|s| s + 1).collect();
            return Err(Error::VerificationFailure(format!("permutation {one_based:?} changes the annihilator table")));
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    Ok(PermutationReport {
        n,
        permutations: count,
        identical: true,
        note: "probabilistic over F_p: one random transform stands in for algebraically independent entries".into(),
    })
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(k) = (1..a.len()).rev().find(|&k| a[k - 1] < a[k]) else { return false };
    let l = (k..a.len()).rev().find(|&l| a[l] > a[k - 1]).expect("successor exists");
    a.swap(k - 1, l);
    a[k..].reverse();
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthTriple {
    pub depth_e: usize,
    pub depth_s: usize,
    pub reg_s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrReport {
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub n: usize,
    pub minimal_nonfaces: Vec<String>,
    pub formulas: DepthTriple,
    pub pipeline: DepthTriple,
}

pub fn str_nonfaces(s: usize, t: usize, r: usize) -> Result<(usize, Vec<Mask>)> {
    if r == 0 || s < t || s - t > r {
        return Err(Error::ParameterInfeasible(format!("(s,t,r) = ({s},{t},{r}) needs r >= 1 and 0 <= s - t <= r")));
    }
    if s == t {
        // the first family degenerates to the vertices t+1..n
        return Err(Error::ParameterInfeasible(format!(
            "(s,t,r) = ({s},{t},{r}): s = t makes {{{}}}, .., {{{}}} non-faces, so the complex has no full support",
            t + 1,
            t + r + 3
        )));
    }
    let n = t + r + 3;
    let gap = s - t;
    let top: Mask = ((n - gap + 1)..=n).fold(0, |m, v| m | vertex_bit(v));
    let mut out: Vec<Mask> = ((t + 1)..=(n - gap)).map(|i| top | vertex_bit(i)).collect();
    out.push(((n - r - 1)..=(n - 1)).fold(0, |m, v| m | vertex_bit(v)));
    let block: Mask = ((n - r - 1)..=n).fold(0, |m, v| m | vertex_bit(v));
    for j in (n - gap + 1)..=(n - 1) {
        out.push(block & !vertex_bit(j));
    }
    Ok((n, out))
}

/// The complex with prescribed `(depth_S, depth_E, reg_S) = (s, t, r)`.
pub fn str_complex(s: usize, t: usize, r: usize, ctx: &GenericContext) -> Result<(SimplicialComplex, StrReport)> {
    let (n, nonfaces) = str_nonfaces(s, t, r)?;
    let delta = SimplicialComplex::from_nonfaces(n, &nonfaces)?;
    if !delta.is_full_support() {
        return Err(Error::ParameterInfeasible(format!("(s,t,r) = ({s},{t},{r}) gives a complex without full support")));
    }
    let mut expected = nonfaces.clone();
    let mut got = delta.minimal_nonfaces();
    expected.sort_unstable();
    got.sort_unstable();
    if expected != got {
        return Err(Error::VerificationFailure(format!("({s},{t},{r}): listed non-faces are not the minimal ones")));
    }
    let je = stable_invariants(&MonomialIdeal::face_ideal(&delta, Ring::Exterior))?;
    let is = stable_invariants(&MonomialIdeal::face_ideal(&delta, Ring::SymmetricSquarefree))?;
    let formulas = DepthTriple {
        depth_e: je.depth_e.expect("exterior"),
        depth_s: is.depth_s.expect("symmetric"),
        reg_s: is.reg_s.expect("symmetric"),
    };
    let chain = verify_depth_chain(&delta, ctx)?;
    let pipeline = DepthTriple { depth_e: chain.depth_e, depth_s: chain.depth_s, reg_s: chain.reg_s };
    let target = DepthTriple { depth_e: t, depth_s: s, reg_s: r };
    if formulas != target || pipeline != target {
        return Err(Error::VerificationFailure(format!(
            "({s},{t},{r}): formulas give {formulas:?}, pipeline gives {pipeline:?}"
        )));
    }
    let report = StrReport { s, t, r, n, minimal_nonfaces: got.iter().map(|&m| set_string(m)).collect(), formulas, pipeline };
    Ok((delta, report))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub n: usize,
    pub dim: isize,
    pub depth_e: usize,
    pub depth_s: usize,
    pub reg_s: usize,
    pub cx_e: usize,
    pub projdim_s: usize,
    pub cone_r: usize,
    pub gamma_dim: isize,
    pub cohen_macaulay: bool,
    pub linear_resolution: bool,
    pub right_equality: bool,
}

impl ChainReport {
    pub fn chain_string(&self) -> String {
        let gap = self.depth_s - self.depth_e;
        let right = if self.right_equality { "=" } else { "<" };
        format!("0 <= {gap} = {} {right} {}", self.cx_e - self.projdim_s, self.reg_s)
    }
}

/// Depth chain `0 <= depth_S - depth_E = cx_E - projdim_S <= reg_S`, with
/// `depth_E` by three routes and equality forced in the CM and linear cases.
pub fn verify_depth_chain(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<ChainReport> {
    if !delta.is_full_support() {
        return Err(Error::NotFullSupport);
    }
    let shifting = exterior_shift_full(delta, ctx)?;
    chain_from_shifted(delta, &shifting.shifted, &shifting.gin, ctx.field())
}

/// As [`verify_depth_chain`] once `Δ^e` and `gin(J_Δ)` are known.
pub fn chain_from_shifted(
    delta: &SimplicialComplex,
    shifted: &SimplicialComplex,
    gin: &MonomialIdeal,
    field: &PrimeField,
) -> Result<ChainReport> {
    let n = delta.n();
    let fail = |m: String| Err(Error::VerificationFailure(m));
    let by_formula = stable_invariants(gin)?.depth_e.expect("exterior");
    let by_alpha = depth_from_alpha(&alpha_from_shifted(shifted), n);
    let (cone_r, gamma) = shifted.split_cone_part()?;
    if by_formula != by_alpha || by_alpha != cone_r {
        return fail(format!("depth_E routes disagree: formula {by_formula}, annihilators {by_alpha}, cone {cone_r}"));
    }
    if !gamma.is_nonacyclic(field) {
        return fail("the link part Γ of Δ^e is acyclic".into());
    }
    if gamma.dim() != delta.dim() - cone_r as isize {
        return fail(format!("dim Γ = {} but dim Δ - r = {}", gamma.dim(), delta.dim() - cone_r as isize));
    }
    let is = MonomialIdeal::face_ideal(shifted, Ring::SymmetricSquarefree);
    let ek = betti_s_eliahou_kervaire(&is)?;
    let depth_s = depth_s_via_auslander_buchsbaum(&ek, n)?;
    let reg_s = ek.regularity().ok_or(Error::EmptyTable)?;
    let st = stable_invariants(&is)?;
    if st.depth_s != Some(depth_s) || st.reg_s != Some(reg_s) {
        return fail(format!("stable formulas {:?} disagree with Betti table ({depth_s}, {reg_s})", (st.depth_s, st.reg_s)));
    }
    let depth_e = by_formula;
    let cx_e = n - depth_e;
    let projdim_s = n - depth_s;
    if depth_s < depth_e || cx_e < projdim_s {
        return fail(format!("depth_S = {depth_s} < depth_E = {depth_e}"));
    }
    if depth_s - depth_e != cx_e - projdim_s {
        return fail("depth gap differs from cx_E - projdim_S".into());
    }
    if depth_s - depth_e > reg_s {
        return fail(format!("depth gap {} exceeds reg_S = {reg_s}", depth_s - depth_e));
    }
    let dim = delta.dim();
    let cohen_macaulay = depth_s as isize == dim + 1;
    let degrees = is.generator_degrees();
    let linear_resolution = !degrees.is_empty() && degrees.iter().all(|&d| d == degrees[0]) && reg_s + 1 == degrees[0];
    let report = ChainReport {
        n,
        dim,
        depth_e,
        depth_s,
        reg_s,
        cx_e,
        projdim_s,
        cone_r,
        gamma_dim: gamma.dim(),
        cohen_macaulay,
        linear_resolution,
        right_equality: depth_s - depth_e == reg_s,
    };
    verify_equality_cases(&report)?;
    Ok(report)
}

/// Cohen–Macaulay or linear resolution forces `depth_S - depth_E = reg_S`.
pub fn verify_equality_cases(report: &ChainReport) -> Result<()> {
    if (report.cohen_macaulay || report.linear_resolution) && !report.right_equality {
        return Err(Error::VerificationFailure(format!(
            "equality expected (CM: {}, linear: {}) but chain is {}",
            report.cohen_macaulay,
            report.linear_resolution,
            report.chain_string()
        )));
    }
    Ok(())
}

/// Vertex lists of the minimal non-faces, for reports.
pub fn nonface_lists(delta: &SimplicialComplex) -> Vec<Vec<usize>> {
    delta.minimal_nonfaces().into_iter().map(vertices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::mask_from_vertices;
    use crate::ideal::koszul_betti_oracle;
    use proptest::prelude::*;

    fn field() -> PrimeField {
        PrimeField::default_field()
    }

    fn ctx() -> GenericContext {
        GenericContext::new(field(), 5, 2).unwrap()
    }

    fn ext(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let masks: Vec<Mask> = gens.iter().map(|g| mask_from_vertices(n, g).unwrap()).collect();
        MonomialIdeal::minimalize(Ring::Exterior, n, &masks).unwrap()
    }

    fn not_cm() -> MonomialIdeal {
        ext(4, &[&[3, 4], &[1, 2, 4]])
    }

    fn triangle_ideal() -> MonomialIdeal {
        ext(4, &[&[2, 3], &[2, 4], &[3, 4]])
    }

    fn complex(n: usize, nonfaces: &[&[usize]]) -> SimplicialComplex {
        let masks: Vec<Mask> = nonfaces.iter().map(|g| mask_from_vertices(n, g).unwrap()).collect();
        SimplicialComplex::from_nonfaces(n, &masks).unwrap()
    }

    fn s_ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn alpha_e_sequence_examples() {
        let f = field();
        let j = triangle_ideal();
        assert_eq!(alpha_e_sequence(&j, &SequenceSpec::identity(4), 2, 1, &f).unwrap(), 2);
        let swapped = SequenceSpec::StandardPermutation(vec![2, 1, 3, 4]);
        assert_eq!(alpha_e_sequence(&j, &swapped, 2, 1, &f).unwrap(), 0);
        let z = MonomialIdeal::zero(Ring::Exterior, 4);
        let gamma = ctx().random_transform(4, 0, 99);
        assert!(alpha_e_table_for_sequence(&z, &SequenceSpec::TransformColumns(gamma), &f).unwrap().is_zero());
        assert!(alpha_e_sequence(&j, &SequenceSpec::identity(4), 0, 1, &f).is_err());
        assert!(alpha_e_sequence(&j, &SequenceSpec::identity(4), 5, 1, &f).is_err());
    }

    #[test]
    fn invalid_sequences_rejected() {
        let f = field();
        let j = triangle_ideal();
        let bad = SequenceSpec::StandardPermutation(vec![1, 1, 3, 4]);
        assert!(alpha_e_table_for_sequence(&j, &bad, &f).is_err());
        let singular = SequenceSpec::TransformColumns(MatrixFp::zeros(4, 4));
        assert_eq!(alpha_e_table_for_sequence(&j, &singular, &f).unwrap_err(), Error::SingularTransform);
    }

    #[test]
    fn alpha_e_generic_examples() {
        let c = ctx();
        let t = alpha_e_generic(&not_cm(), &c).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![(1, 2, 1), (3, 1, 1)]);
        assert!(alpha_e_generic(&MonomialIdeal::zero(Ring::Exterior, 4), &c).unwrap().is_zero());
        assert_eq!(alpha_e_generic(&triangle_ideal(), &c).unwrap().get(2, 1), 2);
    }

    #[test]
    fn standard_monomial_examples() {
        let g = not_cm();
        assert_eq!(alpha_from_standard_monomials(&g, 3, 1).unwrap(), 1);
        assert_eq!(alpha_from_standard_monomials(&g, 1, 2).unwrap(), 1);
        assert_eq!(alpha_from_standard_monomials(&g, 1, 7).unwrap(), 0);
        let not_stable = ext(4, &[&[1, 2]]);
        assert!(matches!(alpha_from_standard_monomials(&not_stable, 1, 1), Err(Error::StabilityViolation(_))));
    }

    #[test]
    fn alpha_complex_examples() {
        let c = ctx();
        let t = alpha_complex(&complex(4, &[&[3, 4], &[1, 2, 4]]), &c).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(1, 2, 1), (3, 1, 1)]);
        assert!(alpha_complex(&SimplicialComplex::simplex(4).unwrap(), &c).unwrap().is_zero());
        let hollow = complex(3, &[&[1, 2, 3]]);
        assert_eq!(alpha_complex(&hollow, &c).unwrap().entries().collect::<Vec<_>>(), vec![(1, 2, 1)]);
    }

    #[test]
    fn depth_from_alpha_examples() {
        let c = ctx();
        assert_eq!(depth_from_alpha(&alpha_e_generic(&not_cm(), &c).unwrap(), 4), 0);
        assert_eq!(depth_from_alpha(&AnnihilatorTable::new(Ring::Exterior, 4), 4), 4);
        let cone = complex(4, &[&[2, 3, 4]]);
        assert_eq!(depth_from_alpha(&alpha_complex(&cone, &c).unwrap(), 4), 1);
    }

    #[test]
    fn betti_from_alpha_examples() {
        let c = ctx();
        let t = betti_s_from_alpha(&complex(4, &[&[3, 4], &[1, 2, 4]]), &c).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.entries().count(), 4);
        let simplex = betti_s_from_alpha(&SimplicialComplex::simplex(3).unwrap(), &c).unwrap();
        assert_eq!(simplex.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        let hollow = betti_s_from_alpha(&complex(3, &[&[1, 2, 3]]), &c).unwrap();
        assert_eq!(hollow.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 1)]);
    }

    #[test]
    fn bound_examples() {
        let c = ctx();
        let rep = cartan_betti_bound_check(&triangle_ideal(), &c, 3, 3, 1..=4).unwrap();
        assert!(rep.equality_everywhere);
        let z = cartan_betti_bound_check(&MonomialIdeal::zero(Ring::Exterior, 3), &c, 3, 3, 1..=3).unwrap();
        assert!(z.entries.iter().all(|e| e.h == 0 && e.bound == 0));
        let rep = cartan_betti_bound_check(&not_cm(), &c, 3, 3, 1..=4).unwrap();
        assert!(rep.entries.iter().all(|e| e.h <= e.bound));
    }

    #[test]
    fn alpha_s_sequence_examples() {
        let f = field();
        let i = s_ideal(3, &[&[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        let std = SequenceSpec::identity(3);
        let sw = SequenceSpec::StandardPermutation(vec![2, 1, 3]);
        assert_eq!(alpha_s_sequence(&i, &std, 2, 1, 3, &f).unwrap(), 2);
        assert_eq!(alpha_s_sequence(&i, &sw, 2, 1, 3, &f).unwrap(), 0);
        assert_eq!(alpha_s_sequence(&i, &std, 1, 1, 3, &f).unwrap(), 0);
        assert_eq!(alpha_s_sequence(&i, &sw, 1, 1, 3, &f).unwrap(), 2);
        assert_eq!(alpha_s_sequence(&i, &std, 4, 0, 3, &f).unwrap(), 1);
        assert!(alpha_s_sequence(&i, &std, 5, 0, 3, &f).is_err());
    }

    #[test]
    fn alpha_s_generic_examples() {
        let c = ctx();
        let i = s_ideal(3, &[&[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(alpha_s_generic(&i, &c, 3).unwrap().get(2, 1), 2);
        let z = alpha_s_generic(&MonomialIdeal::zero(Ring::SymmetricSquarefree, 3), &c, 2).unwrap();
        assert_eq!(z.entries().collect::<Vec<_>>(), vec![(4, 0, 1)]);
        let nc = not_cm().with_ring(Ring::SymmetricSquarefree).unwrap();
        let t = alpha_s_generic(&nc, &c, 4).unwrap();
        assert!(t.row_is_zero(1) && t.row_is_zero(2));
    }

    #[test]
    fn counterexamples() {
        let c = ctx();
        let e = counterexample_e(4, 2, 1, &c).unwrap();
        assert_eq!((e.generic_alpha_ij, e.swapped_alpha_ij, e.generic_alpha_prev, e.swapped_alpha_prev), (2, 0, 0, 2));
        let s = counterexample_s(3, 2, 1, &c).unwrap();
        assert_eq!((s.generic_alpha_ij, s.swapped_alpha_ij, s.generic_alpha_prev, s.swapped_alpha_prev), (2, 0, 0, 2));
        assert!(counterexample_e(5, 2, 2, &c).unwrap().strict);
        assert!(matches!(counterexample_e(4, 1, 1, &c), Err(Error::ParameterInfeasible(_))));
        assert!(matches!(counterexample_e(4, 3, 2, &c), Err(Error::ParameterInfeasible(_))));
    }

    #[test]
    fn permutation_examples() {
        let c = ctx();
        assert_eq!(permutation_invariance_check(&not_cm(), &c, 5).unwrap().permutations, 24);
        assert!(permutation_invariance_check(&MonomialIdeal::zero(Ring::Exterior, 3), &c, 5).unwrap().identical);
        assert!(permutation_invariance_check(&triangle_ideal(), &c, 5).unwrap().identical);
        assert!(matches!(permutation_invariance_check(&ext(6, &[&[5, 6]]), &c, 5), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn str_examples() {
        let c = ctx();
        for (s, t, r) in [(2, 0, 2), (3, 2, 1), (1, 0, 3), (4, 1, 3)] {
            let (delta, rep) = str_complex(s, t, r, &c).unwrap();
            assert_eq!(delta.n(), t + r + 3);
            assert_eq!(rep.pipeline, DepthTriple { depth_e: t, depth_s: s, reg_s: r });
        }
        assert!(matches!(str_complex(1, 1, 3, &c), Err(Error::ParameterInfeasible(_))));
        assert!(matches!(str_complex(3, 0, 2, &c), Err(Error::ParameterInfeasible(_))));
        assert!(matches!(str_complex(1, 0, 0, &c), Err(Error::ParameterInfeasible(_))));
    }

    #[test]
    fn chain_examples() {
        let c = ctx();
        let rep = verify_depth_chain(&complex(4, &[&[3, 4], &[1, 2, 4]]), &c).unwrap();
        assert_eq!((rep.depth_e, rep.depth_s, rep.reg_s, rep.cx_e, rep.projdim_s), (0, 2, 2, 4, 2));
        assert!(rep.right_equality && !rep.cohen_macaulay && !rep.linear_resolution);
        assert_eq!(rep.chain_string(), "0 <= 2 = 2 = 2");
        let simplex = verify_depth_chain(&SimplicialComplex::simplex(4).unwrap(), &c).unwrap();
        assert_eq!((simplex.depth_e, simplex.depth_s, simplex.reg_s), (4, 4, 0));
        let (delta, _) = str_complex(3, 1, 3, &c).unwrap();
        let rep = verify_depth_chain(&delta, &c).unwrap();
        assert!(!rep.right_equality);
        assert_eq!(rep.chain_string(), "0 <= 2 = 2 < 3");
    }

    #[test]
    fn alpha_transfer_matches_koszul_on_shifted() {
        let c = ctx();
        let delta = complex(5, &[&[1, 2], &[3, 4, 5]]);
        let shifted = exterior_shift(&delta, &c).unwrap();
        let from_alpha = betti_s_from_alpha_shifted(&shifted).unwrap();
        let koszul = koszul_betti_oracle(&MonomialIdeal::face_ideal(&shifted, Ring::SymmetricSquarefree), &field(), 5, 5).unwrap();
        assert_eq!(from_alpha, koszul);
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(1u64..(1u64 << n), 0..5).prop_map(move |gens| {
            let gens: Vec<Mask> = gens.into_iter().filter(|m| m.count_ones() >= 1).collect();
            MonomialIdeal::minimalize(Ring::Exterior, n, &gens).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn generic_matches_standard_monomials(j in arb_ideal(4)) {
            let c = ctx();
            let gin = gin_rlex(&j, &c).unwrap();
            let a = alpha_e_generic_with_gin(&j, &gin, &c).unwrap();
            prop_assert_eq!(&a, &alpha_table_from_standard_monomials(&gin).unwrap());
            prop_assert_eq!(depth_from_alpha(&a, 4), stable_invariants(&gin).unwrap().depth_e.unwrap());
        }

        #[test]
        fn alpha_entries_from_any_sequence_are_consistent(j in arb_ideal(4), seed in 0u64..1000) {
            let gamma = ctx().with_seed(seed).random_transform(4, 0, 0);
            prop_assert!(alpha_e_table_for_sequence(&j, &SequenceSpec::TransformColumns(gamma), &field()).is_ok());
        }
    }
}
