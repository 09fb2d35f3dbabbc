//! Monomials of the polynomial ring `S = K[x_1, ..., x_n]` as exponent
//! vectors, with the revlex order for `x_1 < ... < x_n`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::linalg::PrimeField;

pub type Exponents = Vec<u32>;

pub fn degree(u: &[u32]) -> usize {
    u.iter().map(|&e| e as usize).sum()
}

/// Smallest variable index (1-based) dividing `u`.
pub fn min_index(u: &[u32]) -> Option<usize> {
    u.iter().position(|&e| e > 0).map(|k| k + 1)
}

pub fn divides(u: &[u32], v: &[u32]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

pub fn is_squarefree(u: &[u32]) -> bool {
    u.iter().all(|&e| e <= 1)
}

/// `u > v` iff at the smallest index where they differ `u` has the smaller
/// exponent; agrees with the exterior revlex order on squarefree monomials.
pub fn rlex_cmp(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        if a != b {
            return b.cmp(a);
        }
    }
    Ordering::Equal
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Exponents> {
    fn rec(k: usize, n: usize, left: usize, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if k + 1 == n {
            cur[k] = left as u32;
            out.push(cur.clone());
            cur[k] = 0;
            return;
        }
        for e in 0..=left {
            cur[k] = e as u32;
            rec(k + 1, n, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, n, d, &mut vec![0; n], &mut out);
    out
}

pub fn monomial_string(u: &[u32]) -> String {
    if u.iter().all(|&e| e == 0) {
        return "1".to_string();
    }
    let mut s = String::new();
    for (k, &e) in u.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("x{}", k + 1)),
            _ => s.push_str(&format!("x{}^{}", k + 1, e)),
        }
    }
    s
}

/// Column indexing of `S_d`, `d <= max_degree`, in descending revlex order.
#[derive(Clone, Debug)]
pub struct SymmetricBases {
    n: usize,
    by_degree: Vec<Vec<Exponents>>,
    index: HashMap<Exponents, usize>,
}

impl SymmetricBases {
    pub fn new(n: usize, max_degree: usize) -> Self {
        let mut by_degree = Vec::with_capacity(max_degree + 1);
        let mut index = HashMap::new();
        for d in 0..=max_degree {
            let mut ms = monomials_of_degree(n, d);
            ms.sort_by(|a, b| rlex_cmp(b, a));
            for (k, m) in ms.iter().enumerate() {
                index.insert(m.clone(), k);
            }
            by_degree.push(ms);
        }
        Self { n, by_degree, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn basis(&self, d: usize) -> &[Exponents] {
        self.by_degree.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    pub fn index_of(&self, u: &[u32]) -> usize {
        self.index[u]
    }

    /// `l · v` for `v` in degree `d` and a linear form `l`.
    pub fn mul_linear(&self, field: &PrimeField, d: usize, v: &[u64], l: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim(d + 1)];
        let mut w = vec![0u32; self.n];
        for (m, &c) in self.basis(d).iter().zip(v) {
            if c == 0 {
                continue;
            }
            w.copy_from_slice(m);
            for (k, &lk) in l.iter().enumerate() {
                if lk == 0 {
                    continue;
                }
                w[k] += 1;
                let idx = self.index_of(&w);
                out[idx] = field.mul_add(out[idx], c, lk);
                w[k] -= 1;
            }
        }
        out
    }

    /// `x^u · v`.
    pub fn mul_monomial(&self, u: &[u32], d: usize, v: &[u64]) -> Vec<u64> {
        let du = degree(u);
        let mut out = vec![0; self.dim(d + du)];
        for (m, &c) in self.basis(d).iter().zip(v) {
            if c != 0 {
                let w: Exponents = m.iter().zip(u).map(|(a, b)| a + b).collect();
                out[self.index_of(&w)] = c;
            }
        }
        out
    }
}
