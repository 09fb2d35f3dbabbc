//! `extdepth`: command-line front end for exterior shifting, depth
//! invariants, Betti numbers and annihilator numbers.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extdepth::io::{parse_input, Input};
use extdepth::linalg::PrimeField;
use extdepth::report;
use extdepth::{Error, GenericContext, Result};

#[derive(Parser, Debug)]
#[command(name = "extdepth", version, about = "Exterior shifting, depth and annihilator numbers over F_p")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, default_value_t = PrimeField::DEFAULT_PRIME)]
    prime: u64,
    /// Seed for the random coordinate changes (default: fresh entropy, echoed).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Independent random transforms that must agree.
    #[arg(long, global = true, default_value_t = 2)]
    trials: usize,
    /// Highest degree for symmetric annihilator tables.
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Largest homological degree in Betti and Cartan tables.
    #[arg(long, global = true, default_value_t = 4)]
    max_i: usize,
    /// Largest internal degree (or j for Cartan-Betti bounds).
    #[arg(long, global = true, default_value_t = 8)]
    max_deg: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RingArg {
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exterior algebraic shifting of a complex.
    Shift { file: PathBuf },
    /// depth_E, depth_S, reg_S, cx_E, projdim_S and Betti tables of a complex.
    Invariants { file: PathBuf },
    /// Generic annihilator numbers of a complex or ideal.
    Annihilators { file: PathBuf },
    /// Cartan-Betti numbers of generic partial sequences against their bound.
    CartanBetti { file: PathBuf },
    /// Graded Betti numbers over S and E.
    Betti { file: PathBuf },
    /// The non-minimality examples for swapped coordinate sequences.
    Counterexample {
        #[arg(long, value_enum, default_value_t = RingArg::E)]
        ring: RingArg,
        n: usize,
        i: usize,
        j: usize,
    },
    /// Complex with prescribed depth_S = s, depth_E = t, reg_S = r.
    StrComplex { s: usize, t: usize, r: usize },
    /// Run verification checks on files, or the builtin suite.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long, value_parser = ["builtin"])]
        suite: Option<String>,
    },
}

fn read_input(path: &PathBuf) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
    parse_input(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

fn input_n(input: &Input) -> usize {
    match input {
        Input::Complex(d) => d.n(),
        Input::Ideal(j) => j.n(),
    }
}

fn complex_of(input: Input) -> Result<extdepth::SimplicialComplex> {
    match input {
        Input::Complex(d) => Ok(d),
        Input::Ideal(_) => Err(Error::RingMismatch("this command needs a complex file".into())),
    }
}

fn context(g: &Global, n: usize) -> Result<GenericContext> {
    let field = PrimeField::for_variables(g.prime, n)?;
    let seed = g.seed.unwrap_or_else(rand::random);
    GenericContext::new(field, seed, g.trials)
}

fn emit<T: serde::Serialize>(machine: bool, value: &T, text: impl FnOnce(&T) -> String) {
    if machine {
        println!("{}", serde_json::to_string_pretty(value).expect("outputs serialize"));
    } else {
        print!("{}", text(value));
    }
}

fn run(cli: Cli) -> Result<i32> {
    let g = &cli.global;
    let m = g.machine;
    match cli.command {
        Command::Shift { file } => {
            let d = complex_of(read_input(&file)?)?;
            let ctx = context(g, d.n())?;
            emit(m, &report::shift(&d, &ctx)?, report::ShiftOutput::render);
        }
        Command::Invariants { file } => {
            let d = complex_of(read_input(&file)?)?;
            let ctx = context(g, d.n())?;
            emit(m, &report::invariants(&d, &ctx, g.max_i, g.max_deg)?, report::InvariantsOutput::render);
        }
        Command::Annihilators { file } => {
            let input = read_input(&file)?;
            let ctx = context(g, input_n(&input))?;
            emit(m, &report::annihilators(&input, &ctx, g.degree_cap)?, report::TablesOutput::render);
        }
        Command::CartanBetti { file } => {
            let input = read_input(&file)?;
            let ctx = context(g, input_n(&input))?;
            emit(m, &report::cartan_betti(&input, &ctx, g.max_i, g.max_deg)?, report::CartanBettiOutput::render);
        }
        Command::Betti { file } => {
            let input = read_input(&file)?;
            let ctx = context(g, input_n(&input))?;
            emit(m, &report::betti(&input, &ctx, g.max_i, g.max_deg)?, report::TablesOutput::render);
        }
        Command::Counterexample { ring, n, i, j } => {
            let ctx = context(g, n)?;
            emit(m, &report::counterexample(ring == RingArg::S, n, i, j, &ctx)?, report::CounterexampleOutput::render);
        }
        Command::StrComplex { s, t, r } => {
            let ctx = context(g, t + r + 3)?;
            emit(m, &report::str_command(s, t, r, &ctx)?, report::StrOutput::render);
        }
        Command::Verify { files, suite } => {
            if files.is_empty() && suite.is_none() {
                return Err(Error::IndexOutOfRange("verify needs files or --suite builtin".into()));
            }
            let inputs: Vec<(String, Input)> =
                files.iter().map(|f| read_input(f).map(|i| (f.display().to_string(), i))).collect::<Result<_>>()?;
            let n = inputs.iter().map(|(_, i)| input_n(i)).max().unwrap_or(0).max(6);
            let ctx = context(g, n)?;
            let mut out = report::verify_inputs(&inputs, &ctx);
            if suite.is_some() {
                let builtin = report::builtin_suite(&ctx);
                out.checks.extend(builtin.checks);
                out.passed = out.checks.iter().all(|c| c.passed);
            }
            emit(m, &out, report::VerifyOutput::render);
            if let Some(f) = out.first_failure() {
                eprintln!("first failing check: [{}] {}: {}", f.tag, f.subject, f.detail);
                return Ok(f.code);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
