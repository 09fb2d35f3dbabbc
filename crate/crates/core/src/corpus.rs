//! Test corpora: exhaustive small complexes, random complexes and ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{full_mask, subsets_of_size, vertex_bit, Mask};
use crate::ideal::{stability_flags, MonomialIdeal, Ring};
use crate::simplicial::SimplicialComplex;

/// Every simplicial complex on `[n]` containing `∅`; with `full_support`
/// only those having every vertex as a face.
pub fn all_complexes(n: usize, full_support: bool) -> Vec<SimplicialComplex> {
    let lowest = if full_support { 2 } else { 1 };
    let candidates: Vec<Mask> = (lowest..=n).flat_map(|k| subsets_of_size(n, k)).collect();
    let mut chosen: Vec<Mask> = Vec::new();
    if full_support {
        chosen.extend((1..=n).map(vertex_bit));
    }
    chosen.push(0);
    let mut out = Vec::new();
    let mut present = vec![false; 1usize << n];
    for &m in &chosen {
        present[m as usize] = true;
    }
    extend(n, &candidates, 0, &mut present, &mut chosen, &mut out);
    out
}

fn extend(n: usize, candidates: &[Mask], at: usize, present: &mut [bool], chosen: &mut Vec<Mask>, out: &mut Vec<SimplicialComplex>) {
    if at == candidates.len() {
        out.push(SimplicialComplex::from_masks(n, chosen).expect("valid faces"));
        return;
    }
    let f = candidates[at];
    extend(n, candidates, at + 1, present, chosen, out);
    // every facet of f precedes it in the candidate order
    let mut boundary_present = true;
    let mut rest = f;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        if !present[(f ^ bit) as usize] {
            boundary_present = false;
            break;
        }
    }
    if boundary_present {
        present[f as usize] = true;
        chosen.push(f);
        extend(n, candidates, at + 1, present, chosen, out);
        chosen.pop();
        present[f as usize] = false;
    }
}

/// Full-support complexes on `n_min..=n_max` vertices spanned by a few
/// random faces.
pub fn random_complexes(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let k = rng.gen_range(1..=6);
            let mut gens: Vec<Mask> = (1..=n).map(vertex_bit).collect();
            for _ in 0..k {
                let size = rng.gen_range(2..=n);
                let mut vs: Vec<usize> = (1..=n).collect();
                vs.shuffle(&mut rng);
                gens.push(vs[..size].iter().fold(0, |m, &v| m | vertex_bit(v)));
            }
            SimplicialComplex::from_masks(n, &gens).expect("valid faces")
        })
        .collect()
}

/// Random proper exterior monomial ideals with 1 to 4 generators.
pub fn random_ideals(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let k = rng.gen_range(1..=4);
            let gens: Vec<Mask> = (0..k)
                .map(|_| loop {
                    let m = rng.gen_range(1..=full_mask(n));
                    if m.count_ones() >= 2 || rng.gen_bool(0.2) {
                        break m;
                    }
                })
                .collect();
            MonomialIdeal::minimalize(Ring::Exterior, n, &gens).expect("nonzero generators")
        })
        .collect()
}

/// The strongly stable ideal generated in degree `d` by all `e_F` whose
/// sorted vertices dominate those of some seed.
pub fn strongly_stable_closure(n: usize, seeds: &[Mask]) -> MonomialIdeal {
    let dominates = |f: Mask, u: Mask| {
        let (a, b) = (crate::exterior::vertices(f), crate::exterior::vertices(u));
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x >= y)
    };
    let d = seeds.first().map_or(0, |m| m.count_ones() as usize);
    let gens: Vec<Mask> = subsets_of_size(n, d).into_iter().filter(|&f| seeds.iter().any(|&u| dominates(f, u))).collect();
    let ideal = MonomialIdeal::minimalize(Ring::Exterior, n, &gens).expect("nonzero generators");
    debug_assert!(stability_flags(&ideal).strongly_stable);
    ideal
}

/// Random strongly stable ideals generated in a single degree `>= 2`.
pub fn random_strongly_stable(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let d = rng.gen_range(2..=n);
            let pool = subsets_of_size(n, d);
            let k = rng.gen_range(1..=2);
            let seeds: Vec<Mask> = (0..k).map(|_| *pool.choose(&mut rng).expect("nonempty")).collect();
            strongly_stable_closure(n, &seeds)
        })
        .collect()
}

/// Squarefree stable ideals of `S` in `n` variables, as face ideals of all
/// complexes (every squarefree proper ideal arises this way).
pub fn squarefree_stable_ideals(n: usize) -> Vec<MonomialIdeal> {
    all_complexes(n, false)
        .iter()
        .map(|d| MonomialIdeal::face_ideal(d, Ring::SymmetricSquarefree))
        .filter(|i| i.is_zero() || stability_flags(i).squarefree_stable)
        .collect()
}
