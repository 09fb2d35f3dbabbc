//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! `cargo test -p extdepth --test acceptance` runs all criteria. Criterion
//! numbers as arguments select a subset (`-- 3 7`). A criterion that fails
//! only in a documented, unattainable part is reported as FAIL but does not
//! fail the process unless `--strict` is given.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use extdepth::annihilators::{
    alpha_e_generic, alpha_e_generic_with_gin, alpha_from_shifted, alpha_table_from_standard_monomials,
    betti_s_from_alpha_shifted, cartan_betti_bound_with_alpha, chain_from_shifted, counterexample_e,
    counterexample_e_feasible, counterexample_s, counterexample_s_feasible, permutation_invariance_with_reference,
    str_complex, verify_depth_chain, AnnihilatorTable, PERMUTATION_MAX_N,
};
use extdepth::cartan::{betti_e_from_betti_s, betti_e_multigraded, betti_e_table, CartanLimits};
use extdepth::corpus::{all_complexes, random_complexes, random_ideals, random_strongly_stable, squarefree_stable_ideals};
use extdepth::generic::{exterior_shift_full, gin_rlex, Shifting};
use extdepth::ideal::{
    betti_s_eliahou_kervaire, depth_s_via_auslander_buchsbaum, koszul_betti_oracle, stable_invariants, stability_flags,
};
use extdepth::{report, Error, GenericContext, MonomialIdeal, PrimeField, Ring, SimplicialComplex};

const SEED_A: u64 = 0x5eed_0001;
const SEED_B: u64 = 0x5eed_0002;
const RANDOM_COMPLEXES: usize = 200;

fn ctx_a() -> GenericContext {
    GenericContext::new(PrimeField::default_field(), SEED_A, 2).expect("two trials")
}

fn ctx_b() -> GenericContext {
    GenericContext::new(PrimeField::default_field(), SEED_B, 3).expect("three trials")
}

struct Entry {
    name: String,
    delta: SimplicialComplex,
    j: MonomialIdeal,
    shifting: Result<Shifting, Error>,
}

/// Exhaustive full-support complexes on n <= 5 and random ones on n <= 8,
/// each shifted once with seed A.
fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let ctx = ctx_a();
        let mut out = Vec::new();
        let exhaustive = (1..=5).flat_map(|n| all_complexes(n, true).into_iter().enumerate().map(move |(k, d)| (format!("n{n}#{k}"), d)));
        let random = random_complexes(RANDOM_COMPLEXES, 3, 8, 2024).into_iter().enumerate().map(|(k, d)| (format!("random#{k}"), d));
        for (name, delta) in exhaustive.chain(random) {
            let j = MonomialIdeal::face_ideal(&delta, Ring::Exterior);
            let shifting = exterior_shift_full(&delta, &ctx);
            out.push(Entry { name, delta, j, shifting });
        }
        out
    })
}

/// Generic α tables of the corpus face ideals, seed A.
fn corpus_alpha() -> &'static [Result<AnnihilatorTable, Error>] {
    static ALPHA: OnceLock<Vec<Result<AnnihilatorTable, Error>>> = OnceLock::new();
    ALPHA.get_or_init(|| {
        let ctx = ctx_a();
        corpus()
            .iter()
            .map(|e| {
                let s = e.shifting.as_ref().map_err(Clone::clone)?;
                alpha_e_generic_with_gin(&e.j, &s.gin, &ctx)
            })
            .collect()
    })
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, name: &str, r: Result<(), String>) {
        self.checked += 1;
        if let Err(m) = r {
            self.failures.push(format!("{name}: {m}"));
        }
    }

    fn outcome(self, what: &str) -> Outcome {
        let passed = self.failures.is_empty();
        let mut detail = format!("{} {what}, {} failures", self.checked, self.failures.len());
        if let Some(first) = self.failures.first() {
            detail.push_str(&format!("; first: {first}"));
        }
        Outcome { passed, detail, known_gap: false }
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    /// The failure is confined to a documented, unattainable part.
    known_gap: bool,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn shifting(e: &Entry) -> Result<&Shifting, String> {
    e.shifting.as_ref().map_err(err)
}

fn c1() -> Outcome {
    let start = Instant::now();
    let d = SimplicialComplex::from_nonfaces(4, &[0b1100, 0b1011]).expect("valid");
    let got = verify_depth_chain(&d, &ctx_a()).map(|c| (c.depth_s, c.reg_s, c.depth_e, c.cx_e));
    let secs = start.elapsed().as_secs_f64();
    let passed = got == Ok((2, 2, 0, 4)) && secs < 1.0;
    Outcome { passed, detail: format!("(depth_S, reg_S, depth_E, cx_E) = {got:?} in {secs:.3}s"), known_gap: false }
}

fn c2() -> Outcome {
    let ctx = ctx_a();
    let mut verified = 0;
    let mut infeasible = Vec::new();
    let mut failures = Vec::new();
    for r in 1..=4usize {
        for t in 0..=3usize {
            for s in t..=t + r {
                match str_complex(s, t, r, &ctx) {
                    Ok(_) => verified += 1,
                    Err(Error::ParameterInfeasible(_)) if s == t => infeasible.push(format!("({s},{t},{r})")),
                    Err(e) => failures.push(format!("({s},{t},{r}): {e}")),
                }
            }
        }
    }
    let total = verified + infeasible.len() + failures.len();
    let mut detail = format!("{verified}/{total} triples verified by formulas and pipeline");
    if !infeasible.is_empty() {
        detail.push_str(&format!(
            "; {} triples with s = t have no such complex (the first non-face family becomes singletons): {}",
            infeasible.len(),
            infeasible.join(" ")
        ));
    }
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; unexpected failure {f}"));
    }
    Outcome { passed: verified == total, detail, known_gap: failures.is_empty() && verified < total }
}

fn c3() -> Outcome {
    let field = PrimeField::default_field();
    let mut tally = Tally::default();
    for e in corpus() {
        tally.check(&e.name, (|| {
            let s = shifting(e)?;
            let (r, gamma) = s.shifted.split_cone_part().map_err(err)?;
            let depth_e = stable_invariants(&s.gin).map_err(err)?.depth_e.expect("exterior");
            if r != depth_e {
                return Err(format!("cone part r = {r} but depth_E = {depth_e}"));
            }
            if SimplicialComplex::join_with_simplex(r, &gamma).map_err(err)? != s.shifted {
                return Err("Δ^e is not 2^[r] * Γ".into());
            }
            if !gamma.is_nonacyclic(&field) {
                return Err("Γ is acyclic".into());
            }
            if gamma.dim() != e.delta.dim() - r as isize {
                return Err(format!("dim Γ = {} vs dim Δ - r = {}", gamma.dim(), e.delta.dim() - r as isize));
            }
            Ok(())
        })());
    }
    tally.outcome("complexes")
}

fn c4() -> Outcome {
    let field = PrimeField::default_field();
    let mut tally = Tally::default();
    let (mut cm, mut linear, mut oracle) = (0, 0, 0);
    for e in corpus() {
        tally.check(&e.name, (|| {
            let s = shifting(e)?;
            let c = chain_from_shifted(&e.delta, &s.shifted, &s.gin, &field).map_err(err)?;
            cm += usize::from(c.cohen_macaulay);
            linear += usize::from(c.linear_resolution);
            if (c.cohen_macaulay || c.linear_resolution) && !c.right_equality {
                return Err(format!("equality case violated: {}", c.chain_string()));
            }
            // independent depth_S and reg_S of K[Δ] itself
            let n = e.delta.n();
            if n <= 5 {
                oracle += 1;
                let i = MonomialIdeal::face_ideal(&e.delta, Ring::SymmetricSquarefree);
                let k = koszul_betti_oracle(&i, &field, n, n).map_err(err)?;
                let depth_s = depth_s_via_auslander_buchsbaum(&k, n).map_err(err)?;
                let reg_s = k.regularity().expect("β_00");
                if (depth_s, reg_s) != (c.depth_s, c.reg_s) {
                    return Err(format!("Koszul gives ({depth_s}, {reg_s}), pipeline ({}, {})", c.depth_s, c.reg_s));
                }
            }
            Ok(())
        })());
    }
    let mut o = tally.outcome("complexes");
    o.detail.push_str(&format!("; {cm} Cohen-Macaulay, {linear} with linear resolution; {oracle} checked against Koszul"));
    o
}

fn c5() -> Outcome {
    let b = ctx_b();
    let mut tally = Tally::default();
    for (e, alpha) in corpus().iter().zip(corpus_alpha()) {
        tally.check(&e.name, (|| {
            let s = shifting(e)?;
            let generic = alpha.as_ref().map_err(err)?;
            if generic != &alpha_table_from_standard_monomials(&s.gin).map_err(err)? {
                return Err("standard-monomial count differs".into());
            }
            if generic != &alpha_from_shifted(&s.shifted) {
                return Err("alpha_complex differs".into());
            }
            let gin_b = gin_rlex(&e.j, &b).map_err(err)?;
            if gin_b != s.gin {
                return Err("gin differs between seeds".into());
            }
            if generic != &alpha_e_generic_with_gin(&e.j, &gin_b, &b).map_err(err)? {
                return Err("seed B gives another table".into());
            }
            Ok(())
        })());
    }
    tally.outcome("complexes, seeds A and B")
}

fn c6() -> Outcome {
    let field = PrimeField::default_field();
    let mut tally = Tally::default();
    for e in corpus() {
        tally.check(&e.name, (|| {
            let s = shifting(e)?;
            // also compares against Eliahou-Kervaire
            let t = betti_s_from_alpha_shifted(&s.shifted).map_err(err)?;
            let n = e.delta.n();
            if n <= 5 {
                let i = MonomialIdeal::face_ideal(&s.shifted, Ring::SymmetricSquarefree);
                if t != koszul_betti_oracle(&i, &field, n, n).map_err(err)? {
                    return Err("Koszul table of I_{Δ^e} differs".into());
                }
            }
            Ok(())
        })());
    }
    let mut stable = 0;
    for n in 1..=5 {
        for (k, i) in squarefree_stable_ideals(n).iter().enumerate() {
            stable += 1;
            tally.check(&format!("stable n{n}#{k}"), (|| {
                let ek = betti_s_eliahou_kervaire(i).map_err(err)?;
                if ek != koszul_betti_oracle(i, &field, n, n).map_err(err)? {
                    return Err("EK differs from Koszul".into());
                }
                Ok(())
            })());
        }
    }
    let mut o = tally.outcome("tables");
    o.detail.push_str(&format!(" ({stable} squarefree stable ideals against Koszul)"));
    o
}

const TRANSFER_MAX_I: usize = 4;

fn c7() -> Outcome {
    let field = PrimeField::default_field();
    let ctx = ctx_a();
    let mut tally = Tally::default();
    let mut dense = 0;
    for n in 1..=5 {
        for (k, d) in all_complexes(n, false).iter().enumerate() {
            tally.check(&format!("n{n}#{k}"), (|| {
                let j = MonomialIdeal::face_ideal(d, Ring::Exterior);
                let i = MonomialIdeal::face_ideal(d, Ring::SymmetricSquarefree);
                let ks = koszul_betti_oracle(&i, &field, n, n).map_err(err)?;
                let max_j = n + 1;
                let be = betti_e_multigraded(&j, &field, TRANSFER_MAX_I, TRANSFER_MAX_I + max_j).map_err(err)?;
                for ii in 0..=TRANSFER_MAX_I {
                    for jj in 0..=max_j {
                        let (cartan, transfer) = (be.get_ij(ii, jj), betti_e_from_betti_s(&ks, ii, jj));
                        if cartan != transfer {
                            return Err(format!("β^E_{{{ii},{}}}: Cartan {cartan}, transfer {transfer}", ii + jj));
                        }
                    }
                }
                // dense generic Cartan complexes on a sample
                if n <= 4 || k % 40 == 0 {
                    dense += 1;
                    let table = betti_e_table(&j, &ctx, 3, 3, CartanLimits::default()).map_err(err)?;
                    if table != be.window(3, 3) {
                        return Err("generic Cartan table differs from the multigraded one".into());
                    }
                }
                Ok(())
            })());
        }
    }
    let mut o = tally.outcome("complexes");
    o.detail.push_str(&format!("; {dense} also with generic sequences"));
    o
}

fn c8() -> Outcome {
    let ctx = ctx_a();
    let mut tally = Tally::default();
    let (mut triples, mut stable_checked) = (0, 0);
    let ideals = random_ideals(60, 2, 5, 88);
    let strongly = random_strongly_stable(20, 3, 5, 89);
    for (k, j) in ideals.iter().chain(&strongly).enumerate() {
        let expect_equality = k >= ideals.len() || {
            let f = stability_flags(j);
            let d = j.generator_degrees();
            f.strongly_stable && d.iter().all(|&x| x == d[0])
        };
        tally.check(&format!("ideal#{k} {:?}", j.generator_strings()), (|| {
            let alpha = alpha_e_generic(j, &ctx).map_err(err)?;
            let r = cartan_betti_bound_with_alpha(j, &alpha, &ctx, 4, 4, 1..=j.n(), CartanLimits::default()).map_err(err)?;
            triples += r.entries.len();
            if expect_equality {
                stable_checked += 1;
                if !r.equality_everywhere {
                    return Err("strict inequality for a single-degree strongly stable ideal".into());
                }
            }
            Ok(())
        })());
    }
    let mut o = tally.outcome("ideals");
    o.detail.push_str(&format!("; {triples} (i,j,r) triples; equality on {stable_checked} strongly stable ideals"));
    o
}

fn c9() -> Outcome {
    let ctx = ctx_a();
    let mut tally = Tally::default();
    tally.check("E (4,2,1) values", (|| {
        let r = counterexample_e(4, 2, 1, &ctx).map_err(err)?;
        let got = (r.generic_alpha_ij, r.swapped_alpha_ij, r.generic_alpha_prev, r.swapped_alpha_prev);
        if got != (2, 0, 0, 2) {
            return Err(format!("{got:?}"));
        }
        Ok(())
    })());
    tally.check("S (3,2,1) values", (|| {
        let r = counterexample_s(3, 2, 1, &ctx).map_err(err)?;
        if (r.generic_alpha_ij, r.generic_alpha_prev) != (2, 0) || r.swapped_alpha_ij != 0 {
            return Err(format!("{r:?}"));
        }
        Ok(())
    })());
    for n in 2..=6 {
        for i in 2..=n {
            for j in 1..=n {
                if counterexample_e_feasible(n, i, j) {
                    tally.check(&format!("E ({n},{i},{j})"), counterexample_e(n, i, j, &ctx).map(|_| ()).map_err(err));
                }
                if j <= 3 && counterexample_s_feasible(n, i, j) {
                    tally.check(&format!("S ({n},{i},{j})"), counterexample_s(n, i, j, &ctx).map(|_| ()).map_err(err));
                }
            }
        }
    }
    tally.outcome("cases")
}

fn c10() -> Outcome {
    let ctx = ctx_a();
    let mut tally = Tally::default();
    let mut perms = 0;
    for (e, alpha) in corpus().iter().zip(corpus_alpha()) {
        if e.delta.n() > PERMUTATION_MAX_N {
            continue;
        }
        tally.check(&e.name, (|| {
            let alpha = alpha.as_ref().map_err(err)?;
            perms += permutation_invariance_with_reference(&e.j, alpha, &ctx, PERMUTATION_MAX_N).map_err(err)?.permutations;
            Ok(())
        })());
    }
    for (k, j) in random_ideals(50, 2, 5, 10).iter().enumerate() {
        tally.check(&format!("ideal#{k}"), (|| {
            let alpha = alpha_e_generic(j, &ctx).map_err(err)?;
            perms += permutation_invariance_with_reference(j, &alpha, &ctx, PERMUTATION_MAX_N).map_err(err)?.permutations;
            Ok(())
        })());
    }
    let mut o = tally.outcome("ideals");
    o.detail.push_str(&format!("; {perms} orderings"));
    o
}

fn strip_run(v: &mut serde_json::Value) {
    if let Some(m) = v.as_object_mut() {
        m.remove("run");
    }
}

fn c11() -> Outcome {
    let (a, b) = (ctx_a(), ctx_b());
    let mut tally = Tally::default();
    let bytes = |ctx: &GenericContext| serde_json::to_vec(&report::builtin_suite(ctx)).expect("serializes");
    let first = bytes(&a);
    tally.check("builtin suite, same seed", if first == bytes(&a) { Ok(()) } else { Err("output bytes differ".into()) });
    tally.check("builtin suite, other seed", {
        let (mut x, mut y): (serde_json::Value, serde_json::Value) =
            (serde_json::from_slice(&first).unwrap(), serde_json::from_slice(&bytes(&b)).unwrap());
        strip_run(&mut x);
        strip_run(&mut y);
        if x == y {
            Ok(())
        } else {
            Err("tables differ".into())
        }
    });
    let sample = corpus().iter().filter(|e| e.delta.n() <= 4 || e.name.starts_with("random#1"));
    for e in sample {
        tally.check(&e.name, (|| {
            let run = |ctx: &GenericContext| -> Result<String, String> {
                let inv = report::invariants(&e.delta, ctx, 4, 8).map_err(err)?;
                serde_json::to_string(&inv).map_err(err)
            };
            let (x1, x2, y) = (run(&a)?, run(&a)?, run(&b)?);
            if x1 != x2 {
                return Err("repeated run differs".into());
            }
            let mut vx: serde_json::Value = serde_json::from_str(&x1).unwrap();
            let mut vy: serde_json::Value = serde_json::from_str(&y).unwrap();
            strip_run(&mut vx);
            strip_run(&mut vy);
            if vx != vy {
                return Err("seed B changes the invariants".into());
            }
            Ok(())
        })());
    }
    tally.outcome("runs")
}

type Criterion = (usize, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let strict = args.iter().any(|a| a == "--strict");
    let selected: BTreeSet<usize> = args.iter().filter_map(|a| a.parse().ok()).collect();
    let criteria: [Criterion; 11] = [
        (1, "not-CM example values", c1),
        (2, "(s,t,r) sweep", c2),
        (3, "cone split of the shifted complex", c3),
        (4, "depth chain and equality cases", c4),
        (5, "annihilator routes agree", c5),
        (6, "β^S from annihilator numbers", c6),
        (7, "β^E transfer", c7),
        (8, "Cartan-Betti bound", c8),
        (9, "swapped-sequence counterexamples", c9),
        (10, "permutation invariance", c10),
        (11, "determinism", c11),
    ];
    let mut bad = 0;
    for (k, title, f) in criteria {
        if !selected.is_empty() && !selected.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let o = f();
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = if !o.passed && o.known_gap { " [unattainable part, see README]" } else { "" };
        println!("criterion {k:>2} {status} {title}: {} ({:.1}s){note}", o.detail, start.elapsed().as_secs_f64());
        if !o.passed && (strict || !o.known_gap) {
            bad += 1;
        }
    }
    if bad == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{bad} criteria failed");
        ExitCode::FAILURE
    }
}
