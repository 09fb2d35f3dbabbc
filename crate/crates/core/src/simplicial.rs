//! Simplicial complexes on `[n]` stored as sets of face bitmasks.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{full_mask, lex_cmp_masks, mask_from_vertices, vertex_bit, Mask};
use crate::linalg::{MatrixFp, PrimeField};

/// Largest vertex count accepted by the constructors.
pub const MAX_VERTICES: usize = 20;

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    faces: HashSet<Mask>,
    // buckets[k] = faces with k vertices, ascending in the lex order
    buckets: Vec<Vec<Mask>>,
    full_support: bool,
}

/// Face counts `f_{-1}, f_0, ..., f_dim`; index 0 holds `f_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_k` for `k >= -1`.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    fn from_face_set(n: usize, faces: HashSet<Mask>) -> Self {
        let mut buckets = vec![Vec::new(); n + 1];
        for &f in &faces {
            buckets[f.count_ones() as usize].push(f);
        }
        for b in buckets.iter_mut() {
            b.sort_by(|a, c| lex_cmp_masks(*a, *c));
        }
        while buckets.len() > 1 && buckets.last().is_some_and(Vec::is_empty) {
            buckets.pop();
        }
        let full_support = (1..=n).all(|v| faces.contains(&vertex_bit(v)));
        Self { n, faces, buckets, full_support }
    }

    /// Downward closure of the given faces (plus the empty face).
    pub fn from_masks(n: usize, generators: &[Mask]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables(n));
        }
        let mut faces = HashSet::new();
        faces.insert(0);
        let mut stack = Vec::new();
        for &g in generators {
            if g & !full_mask(n) != 0 {
                let v = 64 - g.leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if faces.insert(g) {
                stack.push(g);
            }
        }
        while let Some(f) = stack.pop() {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let sub = f ^ bit;
                if faces.insert(sub) {
                    stack.push(sub);
                }
            }
        }
        Ok(Self::from_face_set(n, faces))
    }

    pub fn closure_from_faces(n: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let masks = generators.iter().map(|g| mask_from_vertices(n, g)).collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, &masks)
    }

    /// The complex whose non-faces are exactly the supersets of `nonfaces`.
    pub fn from_nonfaces(n: usize, nonfaces: &[Mask]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables(n));
        }
        let faces = (0..=full_mask(n)).filter(|&f| !nonfaces.iter().any(|&g| g & !f == 0)).collect();
        Ok(Self::from_face_set(n, faces))
    }

    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_masks(n, &[full_mask(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_full_support(&self) -> bool {
        self.full_support
    }

    pub fn contains(&self, face: Mask) -> bool {
        self.faces.contains(&face)
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces with `k` vertices in lex order.
    pub fn faces_of_size(&self, k: usize) -> &[Mask] {
        self.buckets.get(k).map_or(&[], Vec::as_slice)
    }

    /// All faces by size, then lex.
    pub fn faces(&self) -> impl Iterator<Item = Mask> + '_ {
        self.buckets.iter().flatten().copied()
    }

    /// `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.buckets.len() as isize - 2
    }

    pub fn facets(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self
            .faces()
            .filter(|&f| (1..=self.n).all(|v| f & vertex_bit(v) != 0 || !self.contains(f | vertex_bit(v))))
            .collect();
        out.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).reverse().then(lex_cmp_masks(*a, *b)));
        out
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.buckets.iter().map(|b| b.len() as u64).collect())
    }

    /// Inclusion-minimal non-faces, by size and then lex.
    pub fn minimal_nonfaces(&self) -> Vec<Mask> {
        let mut seen = HashSet::new();
        for f in self.faces() {
            for v in 1..=self.n {
                let bit = vertex_bit(v);
                if f & bit != 0 {
                    continue;
                }
                let g = f | bit;
                if self.contains(g) || seen.contains(&g) {
                    continue;
                }
                let mut rest = g;
                let mut minimal = true;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    if !self.contains(g ^ b) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    seen.insert(g);
                }
            }
        }
        let mut out: Vec<Mask> = seen.into_iter().collect();
        out.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp_masks(*a, *b)));
        out
    }

    /// `(F \ {i}) ∪ {j}` stays a face for every face `F`, `i ∈ F`, `j < i`.
    pub fn is_shifted(&self) -> bool {
        self.faces().all(|f| {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let mut lower = bit >> 1;
                while lower != 0 {
                    if f & lower == 0 && !self.contains((f ^ bit) | lower) {
                        return false;
                    }
                    lower >>= 1;
                }
            }
            true
        })
    }

    /// Boundary `C_k -> C_{k-1}` where `C_k` has basis the faces of size `k`.
    fn boundary(&self, k: usize, field: &PrimeField) -> MatrixFp {
        let src = self.faces_of_size(k);
        let dst = self.faces_of_size(k - 1);
        let index: std::collections::HashMap<Mask, usize> = dst.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut m = MatrixFp::zeros(dst.len(), src.len());
        for (c, &f) in src.iter().enumerate() {
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let r = index[&(f ^ bit)];
                m.set(r, c, if pos % 2 == 0 { 1 } else { field.neg(1) });
                pos += 1;
            }
        }
        m
    }

    /// `dim H̃_k` for `k = -1, ..., dim`, stored at index `k + 1`.
    pub fn reduced_homology_dims(&self, field: &PrimeField) -> Vec<usize> {
        let top = self.buckets.len();
        // rank of the boundary leaving faces of size k, k = 0..=top
        let mut ranks = vec![0usize; top + 1];
        for (k, rank) in ranks.iter_mut().enumerate().take(top).skip(1) {
            *rank = self.boundary(k, field).rank(field);
        }
        (0..top).map(|k| self.faces_of_size(k).len() - ranks[k] - ranks[k + 1]).collect()
    }

    pub fn is_nonacyclic(&self, field: &PrimeField) -> bool {
        self.reduced_homology_dims(field).iter().any(|&h| h != 0)
    }

    /// Largest `r` with `Δ = 2^[r] * Γ`; `Γ` is relabeled onto `[n - r]`.
    pub fn split_cone_part(&self) -> Result<(usize, SimplicialComplex)> {
        if !self.is_shifted() {
            return Err(Error::NotShifted);
        }
        let mut r = 0;
        while r < self.n {
            let cone = full_mask(r + 1);
            if self.faces().all(|f| self.contains(f | cone)) {
                r += 1;
            } else {
                break;
            }
        }
        let cone = full_mask(r);
        let gamma: HashSet<Mask> = self.faces().filter(|f| f & cone == 0).map(|f| f >> r).collect();
        Ok((r, Self::from_face_set(self.n - r, gamma)))
    }

    /// `2^[r] * Γ` on `[r + n_Γ]`, with `Γ` moved onto `{r+1, ...}`.
    pub fn join_with_simplex(r: usize, gamma: &SimplicialComplex) -> Result<Self> {
        let n = r + gamma.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables(n));
        }
        let mut faces = HashSet::new();
        for g in gamma.faces() {
            for a in 0..=full_mask(r) {
                faces.insert((g << r) | a);
            }
        }
        Ok(Self::from_face_set(n, faces))
    }

    /// Alternating sum `Σ (-1)^k f_k` over `k >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.buckets.iter().enumerate().map(|(k, b)| if k % 2 == 1 { b.len() as i64 } else { -(b.len() as i64) }).sum()
    }
}
