//! Command outputs: serializable records, aligned text tables and the
//! builtin verification suite.

use std::fmt::Write as _;

use serde::Serialize;

use crate::annihilators::{
    alpha_complex, alpha_e_generic, alpha_e_generic_with_gin, alpha_from_shifted, alpha_s_generic,
    alpha_table_from_standard_monomials, betti_s_from_alpha_shifted, cartan_betti_bound_with_alpha, chain_from_shifted,
    counterexample_e, counterexample_e_feasible, counterexample_s, depth_from_alpha, permutation_invariance_with_reference,
    str_complex, AnnihilatorTable, BoundReport, ChainReport, CounterexampleReport, PermutationReport, StrReport,
    PERMUTATION_MAX_N,
};
use crate::cartan::{betti_e_from_betti_s, betti_e_multigraded, betti_e_table, CartanLimits};
use crate::error::{Error, Result};
use crate::exterior::{lex_cmp_masks, mask_from_vertices, set_string, Mask};
use crate::generic::{default_degree_cap, exterior_shift_full, gin_rlex, GenericContext};
use crate::ideal::{
    betti_s_eliahou_kervaire, koszul_betti_oracle, stability_flags, stable_invariants, BettiTable, MonomialIdeal, Ring,
    KOSZUL_MAX_N,
};
use crate::io::Input;
use crate::simplicial::SimplicialComplex;

/// Parameters echoed in every output so a run can be replayed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunInfo {
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
}

impl RunInfo {
    pub fn of(ctx: &GenericContext) -> Self {
        Self { prime: ctx.field().p(), seed: ctx.seed(), trials: ctx.trials() }
    }
}

/// A table as `[i, j, value]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableOut {
    pub kind: String,
    pub ring: String,
    pub n: usize,
    /// `"i,degree"` for Betti tables, `"i,j"` for annihilator tables.
    pub index: String,
    pub entries: Vec<[u64; 3]>,
}

impl TableOut {
    pub fn betti(kind: &str, ring: &str, n: usize, t: &BettiTable) -> Self {
        Self {
            kind: kind.into(),
            ring: ring.into(),
            n,
            index: "i,degree".into(),
            entries: t.entries().map(|(i, d, v)| [i as u64, d as u64, v]).collect(),
        }
    }

    pub fn alpha(kind: &str, t: &AnnihilatorTable) -> Self {
        Self {
            kind: kind.into(),
            ring: ring_tag(t.ring()).into(),
            n: t.n(),
            index: "i,j".into(),
            entries: t.entries().map(|(i, j, v)| [i as u64, j as u64, v]).collect(),
        }
    }

    pub fn render(&self) -> String {
        if self.index == "i,j" {
            render_grid(&self.kind, &self.entries, |e| (e[0], e[1]), "i\\j", (1, 0))
        } else {
            // Betti tables: rows j = degree - i, columns i
            render_grid(&self.kind, &self.entries, |e| (e[1] - e[0], e[0]), "j\\i", (0, 0))
        }
    }
}

fn ring_tag(r: Ring) -> &'static str {
    match r {
        Ring::Exterior => "E",
        Ring::SymmetricSquarefree | Ring::SymmetricGeneral => "S",
    }
}

fn render_grid(title: &str, entries: &[[u64; 3]], key: impl Fn(&[u64; 3]) -> (u64, u64), corner: &str, start: (u64, u64)) -> String {
    let mut s = format!("{title}\n");
    if entries.is_empty() {
        s.push_str("  (all zero)\n");
        return s;
    }
    let rows = entries.iter().map(|e| key(e).0).max().unwrap_or(0);
    let cols = entries.iter().map(|e| key(e).1).max().unwrap_or(0);
    let (min_row, min_col) = start;
    let value = |r: u64, c: u64| entries.iter().find(|e| key(e) == (r, c)).map(|e| e[2]);
    let width = entries.iter().map(|e| e[2].to_string().len()).max().unwrap_or(1).max(cols.to_string().len()) + 1;
    let _ = write!(s, "{corner:>5}");
    for c in min_col..=cols {
        let _ = write!(s, "{c:>width$}");
    }
    s.push('\n');
    for r in min_row..=rows {
        let _ = write!(s, "{:>4}:", r);
        for c in min_col..=cols {
            match value(r, c) {
                Some(v) => {
                    let _ = write!(s, "{v:>width$}");
                }
                None => {
                    let _ = write!(s, "{:>width$}", ".");
                }
            }
        }
        s.push('\n');
    }
    s
}

fn sorted_faces(mut faces: Vec<Mask>) -> Vec<String> {
    faces.sort_by(|&a, &b| lex_cmp_masks(a, b));
    faces.into_iter().map(set_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftOutput {
    pub command: String,
    pub run: RunInfo,
    pub n: usize,
    pub facets: Vec<String>,
    pub f_vector: Vec<u64>,
    pub gin: Vec<String>,
}

impl ShiftOutput {
    pub fn render(&self) -> String {
        let mut s = run_header(&self.run);
        let _ = writeln!(s, "shifted complex on n = {}", self.n);
        let _ = writeln!(s, "facets: {}", self.facets.join(" "));
        let _ = writeln!(s, "f-vector: {:?}", self.f_vector);
        let _ = writeln!(s, "gin: ({})", self.gin.join(", "));
        s
    }
}

fn run_header(run: &RunInfo) -> String {
    format!("prime {}  seed {}  trials {}\n", run.prime, run.seed, run.trials)
}

pub fn shift(delta: &SimplicialComplex, ctx: &GenericContext) -> Result<ShiftOutput> {
    let sh = exterior_shift_full(delta, ctx)?;
    Ok(ShiftOutput {
        command: "shift".into(),
        run: RunInfo::of(ctx),
        n: delta.n(),
        facets: sorted_faces(sh.shifted.facets()),
        f_vector: sh.shifted.f_vector().0,
        gin: sh.gin.generator_strings(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsOutput {
    pub command: String,
    pub run: RunInfo,
    pub n: usize,
    pub depth_e: usize,
    pub depth_s: usize,
    pub reg_s: usize,
    pub cx_e: usize,
    pub projdim_s: usize,
    pub chain: String,
    pub chain_holds: bool,
    pub report: ChainReport,
    pub betti_s: TableOut,
    pub betti_e_window: TableOut,
}

impl InvariantsOutput {
    pub fn render(&self) -> String {
        let mut s = run_header(&self.run);
        let _ = writeln!(s, "depth_E   {}", self.depth_e);
        let _ = writeln!(s, "depth_S   {}", self.depth_s);
        let _ = writeln!(s, "reg_S     {}", self.reg_s);
        let _ = writeln!(s, "cx_E      {}", self.cx_e);
        let _ = writeln!(s, "projdim_S {}", self.projdim_s);
        let _ = writeln!(
            s,
            "chain     {}  [{}]{}{}",
            self.chain,
            if self.chain_holds { "holds" } else { "FAILS" },
            if self.report.cohen_macaulay { " CM" } else { "" },
            if self.report.linear_resolution { " linear" } else { "" }
        );
        s.push_str(&self.betti_s.render());
        s.push_str(&self.betti_e_window.render());
        s
    }
}

/// `β^S(K[Δ])`: Koszul oracle when small, otherwise the shifted table
/// (same extremal entries).
fn betti_s_of_complex(delta: &SimplicialComplex, shifted: &SimplicialComplex, ctx: &GenericContext) -> Result<(String, BettiTable)> {
    let n = delta.n();
    if n <= KOSZUL_MAX_N {
        let i = MonomialIdeal::face_ideal(delta, Ring::SymmetricSquarefree);
        Ok(("beta^S(K[D]) (Koszul)".into(), koszul_betti_oracle(&i, ctx.field(), n, n + 1)?))
    } else {
        let i = MonomialIdeal::face_ideal(shifted, Ring::SymmetricSquarefree);
        Ok(("beta^S(K[D^e]) (Eliahou-Kervaire)".into(), betti_s_eliahou_kervaire(&i)?))
    }
}

pub fn invariants(delta: &SimplicialComplex, ctx: &GenericContext, max_i: usize, max_deg: usize) -> Result<InvariantsOutput> {
    let n = delta.n();
    let sh = exterior_shift_full(delta, ctx)?;
    let chain = chain_from_shifted(delta, &sh.shifted, &sh.gin, ctx.field())?;
    let (kind, bs) = betti_s_of_complex(delta, &sh.shifted, ctx)?;
    let j = MonomialIdeal::face_ideal(delta, Ring::Exterior);
    let be = betti_e_multigraded(&j, ctx.field(), max_i, max_deg)?;
    if n <= KOSZUL_MAX_N {
        check_transfer(&bs, &be, max_i, max_deg)?;
    }
    Ok(InvariantsOutput {
        command: "invariants".into(),
        run: RunInfo::of(ctx),
        n,
        depth_e: chain.depth_e,
        depth_s: chain.depth_s,
        reg_s: chain.reg_s,
        cx_e: chain.cx_e,
        projdim_s: chain.projdim_s,
        chain: chain.chain_string(),
        chain_holds: true,
        report: chain,
        betti_s: TableOut::betti(&kind, "S", n, &bs),
        betti_e_window: TableOut::betti("beta^E(K{D}) window", "E", n, &be),
    })
}

/// `β^E` must equal the binomial transform of `β^S` in the window.
fn check_transfer(bs: &BettiTable, be: &BettiTable, max_i: usize, max_deg: usize) -> Result<()> {
    for i in 0..=max_i {
        for d in i..=max_deg {
            let want = betti_e_from_betti_s(bs, i, d - i);
            if be.get(i, d) != want {
                return Err(Error::ConsistencyFailure(format!("beta^E_{{{i},{d}}} = {} but transfer gives {want}", be.get(i, d))));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TablesOutput {
    pub command: String,
    pub run: RunInfo,
    pub n: usize,
    pub notes: Vec<String>,
    pub tables: Vec<TableOut>,
}

impl TablesOutput {
    pub fn render(&self) -> String {
        let mut s = run_header(&self.run);
        for note in &self.notes {
            let _ = writeln!(s, "# {note}");
        }
        for t in &self.tables {
            s.push_str(&t.render());
        }
        s
    }
}

pub fn annihilators(input: &Input, ctx: &GenericContext, degree_cap: Option<usize>) -> Result<TablesOutput> {
    let mut notes = Vec::new();
    let (n, tables) = match input {
        Input::Complex(delta) => {
            let a = alpha_complex(delta, ctx)?;
            let g = alpha_e_generic(&MonomialIdeal::face_ideal(delta, Ring::Exterior), ctx)?;
            if a != g {
                return Err(Error::ConsistencyFailure("face count over the shifted complex differs from the generic table".into()));
            }
            notes.push(format!("depth_E = {}", depth_from_alpha(&a, delta.n())));
            (delta.n(), vec![TableOut::alpha("alpha^E (generic)", &a)])
        }
        Input::Ideal(j) if j.ring() == Ring::Exterior => {
            let a = alpha_e_generic(j, ctx)?;
            notes.push(format!("depth_E = {}", depth_from_alpha(&a, j.n())));
            (j.n(), vec![TableOut::alpha("alpha^E (generic)", &a)])
        }
        Input::Ideal(i) => {
            let cap = degree_cap.unwrap_or_else(|| default_degree_cap(i));
            let a = alpha_s_generic(i, ctx, cap)?;
            notes.push(format!(
                "entries with j <= {cap}; the generic sequence is almost regular, so only finitely many degrees are nonzero"
            ));
            (i.n(), vec![TableOut::alpha("alpha^S (generic)", &a)])
        }
    };
    Ok(TablesOutput { command: "annihilators".into(), run: RunInfo::of(ctx), n, notes, tables })
}

fn exterior_ideal_of(input: &Input) -> Result<MonomialIdeal> {
    match input {
        Input::Complex(d) => Ok(MonomialIdeal::face_ideal(d, Ring::Exterior)),
        Input::Ideal(j) if j.ring() == Ring::Exterior => Ok(j.clone()),
        Input::Ideal(_) => Err(Error::RingMismatch("this command needs a complex or an exterior ideal".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanBettiOutput {
    pub command: String,
    pub run: RunInfo,
    pub n: usize,
    pub alpha: TableOut,
    pub bound: BoundReport,
}

impl CartanBettiOutput {
    pub fn render(&self) -> String {
        let mut s = run_header(&self.run);
        s.push_str(&self.alpha.render());
        let _ = writeln!(s, "{:>3} {:>3} {:>3} {:>8} {:>8}", "r", "i", "j", "h", "bound");
        for e in &self.bound.entries {
            let mark = if e.h == e.bound { "=" } else { "<" };
            let _ = writeln!(s, "{:>3} {:>3} {:>3} {:>8} {:>8} {mark}", e.r, e.i, e.j, e.h, e.bound);
        }
        let _ = writeln!(s, "equality everywhere: {}", self.bound.equality_everywhere);
        s
    }
}

pub fn cartan_betti(input: &Input, ctx: &GenericContext, max_i: usize, max_j: usize) -> Result<CartanBettiOutput> {
    let j = exterior_ideal_of(input)?;
    let alpha = alpha_e_generic(&j, ctx)?;
    let bound = cartan_betti_bound_with_alpha(&j, &alpha, ctx, max_i, max_j, 1..=j.n(), CartanLimits::default())?;
    Ok(CartanBettiOutput {
        command: "cartan-betti".into(),
        run: RunInfo::of(ctx),
        n: j.n(),
        alpha: TableOut::alpha("alpha^E (generic)", &alpha),
        bound,
    })
}

pub fn betti(input: &Input, ctx: &GenericContext, max_i: usize, max_deg: usize) -> Result<TablesOutput> {
    let mut notes = Vec::new();
    let mut tables = Vec::new();
    let n = match input {
        Input::Complex(delta) => {
            let n = delta.n();
            let je = MonomialIdeal::face_ideal(delta, Ring::Exterior);
            let be = betti_e_multigraded(&je, ctx.field(), max_i, max_deg)?;
            if delta.is_full_support() {
                let sh = exterior_shift_full(delta, ctx)?;
                let from_alpha = betti_s_from_alpha_shifted(&sh.shifted)?;
                tables.push(TableOut::betti("beta^S(K[D^e]) from annihilator numbers", "S", n, &from_alpha));
                if n > KOSZUL_MAX_N {
                    notes.push("K[D] itself is beyond the Koszul oracle; the shifted table shares its extremal entries".into());
                }
            }
            if n <= KOSZUL_MAX_N {
                let bs = koszul_betti_oracle(&MonomialIdeal::face_ideal(delta, Ring::SymmetricSquarefree), ctx.field(), n, n + 1)?;
                check_transfer(&bs, &be, max_i, max_deg)?;
                notes.push("beta^E agrees with the binomial transform of beta^S".into());
                tables.push(TableOut::betti("beta^S(K[D]) (Koszul)", "S", n, &bs));
            }
            tables.push(TableOut::betti("beta^E(K{D}) (Cartan)", "E", n, &be));
            n
        }
        Input::Ideal(j) if j.ring() == Ring::Exterior => {
            let be = betti_e_multigraded(j, ctx.field(), max_i, max_deg)?;
            if j.n() <= CartanLimits::default().max_n {
                let dense = betti_e_table(j, ctx, 3, 3, CartanLimits::default())?;
                if dense != betti_e_multigraded(j, ctx.field(), 3, 6)?.window(3, 3) {
                    return Err(Error::ConsistencyFailure("generic Cartan homology differs from the multigraded count".into()));
                }
                notes.push("generic Cartan homology agrees with the coordinate computation on i, j <= 3".into());
            }
            tables.push(TableOut::betti("beta^E(E/J) (Cartan)", "E", j.n(), &be));
            j.n()
        }
        Input::Ideal(i) => {
            let n = i.n();
            if i.ring() == Ring::SymmetricSquarefree && stability_flags(i).squarefree_stable {
                tables.push(TableOut::betti("beta^S(S/I) (Eliahou-Kervaire)", "S", n, &betti_s_eliahou_kervaire(i)?));
            }
            if n <= KOSZUL_MAX_N {
                tables.push(TableOut::betti("beta^S(S/I) (Koszul)", "S", n, &koszul_betti_oracle(i, ctx.field(), n, max_deg)?));
            } else if tables.is_empty() {
                return Err(Error::SizeLimit(format!("n = {n} exceeds the Koszul oracle limit {KOSZUL_MAX_N}")));
            }
            n
        }
    };
    Ok(TablesOutput { command: "betti".into(), run: RunInfo::of(ctx), n, notes, tables })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleOutput {
    pub command: String,
    pub run: RunInfo,
    pub report: CounterexampleReport,
}

impl CounterexampleOutput {
    pub fn render(&self) -> String {
        let r = &self.report;
        let mut s = run_header(&self.run);
        let _ = writeln!(s, "ring {}  (n,i,j) = ({},{},{})", r.ring, r.n, r.i, r.j);
        let _ = writeln!(s, "ideal ({})", r.generators.join(", "));
        let _ = writeln!(s, "alpha_{{{},{}}}: generic {} > swapped {}", r.i, r.j, r.generic_alpha_ij, r.swapped_alpha_ij);
        let _ = writeln!(s, "alpha_{{{},{}}}: generic {} < swapped {}", r.i - 1, r.j, r.generic_alpha_prev, r.swapped_alpha_prev);
        let _ = writeln!(s, "strict: {}", r.strict);
        s
    }
}

pub fn counterexample(symmetric: bool, n: usize, i: usize, j: usize, ctx: &GenericContext) -> Result<CounterexampleOutput> {
    let report = if symmetric { counterexample_s(n, i, j, ctx)? } else { counterexample_e(n, i, j, ctx)? };
    Ok(CounterexampleOutput { command: "counterexample".into(), run: RunInfo::of(ctx), report })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrOutput {
    pub command: String,
    pub run: RunInfo,
    pub report: StrReport,
    pub complex_file: String,
}

impl StrOutput {
    pub fn render(&self) -> String {
        let r = &self.report;
        let mut s = run_header(&self.run);
        let _ = writeln!(s, "(s,t,r) = ({},{},{}), n = {}", r.s, r.t, r.r, r.n);
        let _ = writeln!(s, "minimal non-faces: {}", r.minimal_nonfaces.join(" "));
        let _ = writeln!(s, "formulas: depth_E {} depth_S {} reg_S {}", r.formulas.depth_e, r.formulas.depth_s, r.formulas.reg_s);
        let _ = writeln!(s, "pipeline: depth_E {} depth_S {} reg_S {}", r.pipeline.depth_e, r.pipeline.depth_s, r.pipeline.reg_s);
        s.push_str(&self.complex_file);
        s
    }
}

pub fn str_command(s: usize, t: usize, r: usize, ctx: &GenericContext) -> Result<StrOutput> {
    let (delta, report) = str_complex(s, t, r, ctx)?;
    Ok(StrOutput { command: "str-complex".into(), run: RunInfo::of(ctx), report, complex_file: crate::io::write_complex(&delta) })
}

/// One verification line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub tag: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
    /// Exit status the failure maps to (0 when passed).
    pub code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutput {
    pub command: String,
    pub run: RunInfo,
    pub checks: Vec<CheckLine>,
    pub passed: bool,
}

impl VerifyOutput {
    pub fn render(&self) -> String {
        let mut s = run_header(&self.run);
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {:<30} {:<24} {}", if c.passed { "PASS" } else { "FAIL" }, c.tag, c.subject, c.detail);
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(s, "{} checks, {} failed", self.checks.len(), failed);
        s
    }

    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Collects check lines; errors become failed lines.
struct Checks {
    lines: Vec<CheckLine>,
}

impl Checks {
    fn run(&mut self, tag: &str, subject: &str, f: impl FnOnce() -> Result<String>) {
        let (passed, detail, code) = match f() {
            Ok(d) => (true, d, 0),
            Err(e) => (false, e.to_string(), if e.exit_code() == 3 { 3 } else { 4 }),
        };
        self.lines.push(CheckLine { tag: tag.into(), subject: subject.into(), passed, detail, code });
    }
}

fn complex_checks(checks: &mut Checks, name: &str, delta: &SimplicialComplex, ctx: &GenericContext) {
    let shifting = match exterior_shift_full(delta, ctx) {
        Ok(s) => s,
        Err(e) => {
            checks.run("depth-chain", name, || Err(e));
            return;
        }
    };
    let (sh, gin) = (&shifting.shifted, &shifting.gin);
    checks.run("depth-chain", name, || {
        let c = chain_from_shifted(delta, sh, gin, ctx.field())?;
        Ok(format!("{} (depth_E {}, depth_S {})", c.chain_string(), c.depth_e, c.depth_s))
    });
    checks.run("cone-split", name, || {
        let (r, gamma) = sh.split_cone_part()?;
        if !gamma.is_nonacyclic(ctx.field()) || gamma.dim() != delta.dim() - r as isize {
            return Err(Error::VerificationFailure(format!("cone part r = {r} does not split off a non-acyclic complex")));
        }
        Ok(format!("r = {r}, dim Γ = {}", gamma.dim()))
    });
    checks.run("betti-alpha-identity", name, || {
        let t = betti_s_from_alpha_shifted(sh)?;
        let j = MonomialIdeal::face_ideal(delta, Ring::Exterior);
        let generic = alpha_e_generic_with_gin(&j, gin, ctx)?;
        if generic != alpha_from_shifted(sh) || generic != alpha_table_from_standard_monomials(gin)? {
            return Err(Error::VerificationFailure("annihilator tables disagree".into()));
        }
        Ok(format!("{} nonzero Betti entries", t.entries().count()))
    });
    if delta.n() <= PERMUTATION_MAX_N {
        let j = MonomialIdeal::face_ideal(delta, Ring::Exterior);
        ideal_checks(checks, name, &j, ctx);
    }
}

fn ideal_checks(checks: &mut Checks, name: &str, j: &MonomialIdeal, ctx: &GenericContext) {
    let n = j.n();
    let alpha = match gin_rlex(j, ctx).and_then(|g| alpha_e_generic_with_gin(j, &g, ctx).map(|a| (g, a))) {
        Ok(ga) => ga,
        Err(e) => {
            checks.run("stable-formulas", name, || Err(e));
            return;
        }
    };
    let (gin, alpha) = alpha;
    checks.run("stable-formulas", name, || {
        let d = stable_invariants(&gin)?.depth_e.expect("exterior");
        if d != depth_from_alpha(&alpha, n) {
            return Err(Error::VerificationFailure(format!("stable formula {d} vs annihilators {}", depth_from_alpha(&alpha, n))));
        }
        Ok(format!("depth_E = {d}"))
    });
    if n <= PERMUTATION_MAX_N {
        checks.run("permutation-invariance", name, || {
            let r: PermutationReport = permutation_invariance_with_reference(j, &alpha, ctx, PERMUTATION_MAX_N)?;
            Ok(format!("{} orderings agree", r.permutations))
        });
        checks.run("cartan-betti-bound", name, || {
            let top = n.min(3);
            let r = cartan_betti_bound_with_alpha(j, &alpha, ctx, top, top, 1..=n, CartanLimits::default())?;
            Ok(format!("{} triples, equality everywhere: {}", r.entries.len(), r.equality_everywhere))
        });
    }
}

fn complex_from(n: usize, nonfaces: &[&[usize]]) -> SimplicialComplex {
    let masks: Vec<Mask> = nonfaces.iter().map(|f| mask_from_vertices(n, f).expect("valid vertices")).collect();
    SimplicialComplex::from_nonfaces(n, &masks).expect("valid complex")
}

fn ideal_from(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    let masks: Vec<Mask> = gens.iter().map(|f| mask_from_vertices(n, f).expect("valid vertices")).collect();
    MonomialIdeal::minimalize(Ring::Exterior, n, &masks).expect("proper ideal")
}

/// Checks for user-supplied inputs.
pub fn verify_inputs(inputs: &[(String, Input)], ctx: &GenericContext) -> VerifyOutput {
    let mut checks = Checks { lines: Vec::new() };
    for (name, input) in inputs {
        match input {
            Input::Complex(d) if d.is_full_support() => complex_checks(&mut checks, name, d, ctx),
            Input::Complex(_) => checks.run("depth-chain", name, || Err(Error::NotFullSupport)),
            Input::Ideal(j) if j.ring() == Ring::Exterior => ideal_checks(&mut checks, name, j, ctx),
            Input::Ideal(i) => checks.run("annihilators-S", name, || {
                let a = alpha_s_generic(i, ctx, default_degree_cap(i))?;
                Ok(format!("{} nonzero entries", a.entries().count()))
            }),
        }
    }
    finish(checks, ctx)
}

fn finish(checks: Checks, ctx: &GenericContext) -> VerifyOutput {
    let passed = checks.lines.iter().all(|c| c.passed);
    VerifyOutput { command: "verify".into(), run: RunInfo::of(ctx), checks: checks.lines, passed }
}

/// The builtin suite: named examples, small sweeps and the counterexamples.
pub fn builtin_suite(ctx: &GenericContext) -> VerifyOutput {
    let mut checks = Checks { lines: Vec::new() };
    let not_cm = complex_from(4, &[&[3, 4], &[1, 2, 4]]);
    checks.run("depth-chain", "not-CM example values", || {
        let c = crate::annihilators::verify_depth_chain(&not_cm, ctx)?;
        let got = (c.depth_e, c.depth_s, c.reg_s, c.cx_e);
        if got != (0, 2, 2, 4) {
            return Err(Error::VerificationFailure(format!("(depth_E, depth_S, reg_S, cx_E) = {got:?}")));
        }
        Ok(format!("(depth_E, depth_S, reg_S, cx_E) = {got:?}"))
    });
    let named: Vec<(&str, SimplicialComplex)> = vec![
        ("not-CM example", not_cm.clone()),
        ("simplex n=4", SimplicialComplex::simplex(4).expect("n small")),
        ("hollow triangle", complex_from(3, &[&[1, 2, 3]])),
        ("cone over triangle", complex_from(4, &[&[2, 3, 4]])),
        ("5-cycle", complex_from(5, &[&[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]])),
        ("two edges", complex_from(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])),
    ];
    for (name, d) in &named {
        complex_checks(&mut checks, name, d, ctx);
    }
    let ideals = [
        ("(e2e3,e2e4,e3e4)", ideal_from(4, &[&[2, 3], &[2, 4], &[3, 4]])),
        ("(e1e2,e3e4)", ideal_from(4, &[&[1, 2], &[3, 4]])),
        ("zero ideal n=3", MonomialIdeal::zero(Ring::Exterior, 3)),
    ];
    for (name, j) in &ideals {
        ideal_checks(&mut checks, name, j, ctx);
    }
    checks.run("cartan-betti-bound", "equality for (e2e3,e2e4,e3e4)", || {
        let j = &ideals[0].1;
        let a = alpha_e_generic(j, ctx)?;
        let r = cartan_betti_bound_with_alpha(j, &a, ctx, 3, 3, 1..=4, CartanLimits::default())?;
        if !r.equality_everywhere {
            return Err(Error::VerificationFailure("strict inequality for a single-degree strongly stable ideal".into()));
        }
        Ok("equality everywhere".into())
    });
    for (n, i, j) in [(4, 2, 1), (5, 2, 2), (5, 3, 1), (6, 2, 3)] {
        checks.run("annihilator-counterexample-E", &format!("(n,i,j)=({n},{i},{j})"), || {
            debug_assert!(counterexample_e_feasible(n, i, j));
            let r = counterexample_e(n, i, j, ctx)?;
            Ok(counterexample_detail(&r))
        });
    }
    for (n, i, j) in [(3, 2, 1), (4, 2, 2), (4, 3, 1)] {
        checks.run("annihilator-counterexample-S", &format!("(n,i,j)=({n},{i},{j})"), || {
            let r = counterexample_s(n, i, j, ctx)?;
            Ok(counterexample_detail(&r))
        });
    }
    for (s, t, r) in [(2, 0, 2), (3, 2, 1), (3, 1, 3), (2, 1, 1), (4, 1, 3)] {
        checks.run("stable-formulas", &format!("(s,t,r)=({s},{t},{r})"), || {
            let (_, rep) = str_complex(s, t, r, ctx)?;
            Ok(format!("depth_E {} depth_S {} reg_S {}", rep.pipeline.depth_e, rep.pipeline.depth_s, rep.pipeline.reg_s))
        });
    }
    checks.run("betti-alpha-identity", "Koszul oracle on the shifted not-CM example", || {
        let sh = exterior_shift_full(&not_cm, ctx)?.shifted;
        let t = betti_s_from_alpha_shifted(&sh)?;
        let k = koszul_betti_oracle(&MonomialIdeal::face_ideal(&sh, Ring::SymmetricSquarefree), ctx.field(), 4, 5)?;
        if t != k {
            return Err(Error::VerificationFailure("Koszul oracle disagrees".into()));
        }
        Ok("matches".into())
    });
    finish(checks, ctx)
}

fn counterexample_detail(r: &CounterexampleReport) -> String {
    format!(
        "alpha_{{{i},{j}}} {} > {}, alpha_{{{p},{j}}} {} < {}",
        r.generic_alpha_ij,
        r.swapped_alpha_ij,
        r.generic_alpha_prev,
        r.swapped_alpha_prev,
        i = r.i,
        j = r.j,
        p = r.i - 1
    )
}
