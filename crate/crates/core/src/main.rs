use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use supertrace::graded::{corollary22_lhs, corollary25_check, corollary27_lhs, theorem21_lhs, theorem23_lhs};
use supertrace::harness::{run_trials, selftest, TheoremSelector, TrialConfig, DEFAULT_MIN_NON_VACUOUS};
use supertrace::symbolic::{emit, symbolic_theorem21, symbolic_theorem23, Format};
use supertrace::{AlgebraConfig, Matrix};

/// Environment variable supplying the default generator count.
const GENERATORS_ENV: &str = "SUPERTRACE_GENERATORS";

#[derive(Parser)]
#[command(
    name = "supertrace",
    version,
    about = "Z2-graded Cayley-Hamilton trace identities over the Grassmann algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Thm21,
    Thm23,
    Cor22,
    Cor25,
    Cor27,
}

impl From<TheoremArg> for TheoremSelector {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Thm21 => TheoremSelector::Thm21,
            TheoremArg::Thm23 => TheoremSelector::Thm23,
            TheoremArg::Cor22 => TheoremSelector::Cor22,
            TheoremArg::Cor25 => TheoremSelector::Cor25,
            TheoremArg::Cor27 => TheoremSelector::Cor27,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Thm21,
    Thm23,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Latex,
    Sexpr,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity on seeded random matrices.
    Verify {
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        /// Generator count G (default: $SUPERTRACE_GENERATORS, else per theorem).
        #[arg(long)]
        gens: Option<u32>,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum blade degree of random entries.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Terms per random entry.
        #[arg(long, default_value_t = 2)]
        terms: usize,
        /// Share of trials expected to be non-vacuous; below it the run is flagged.
        #[arg(long, default_value_t = DEFAULT_MIN_NON_VACUOUS)]
        min_non_vacuous: f64,
        /// Print the full JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Print a symbolic identity.
    Emit {
        identity: IdentityArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Latex)]
        format: FormatArg,
    },
    /// Evaluate an identity's left-hand side on matrices read from JSON files.
    Evaluate {
        theorem: TheoremArg,
        /// Even matrix A (pair identities only).
        #[arg(long)]
        a: Option<PathBuf>,
        /// Odd matrix B.
        #[arg(long)]
        b: PathBuf,
        /// Generator count; inferred from the files when omitted.
        #[arg(long)]
        gens: Option<u32>,
    },
    /// Run the built-in golden and hand-computed checks.
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn generators(flag: Option<u32>, theorem: TheoremSelector, n: usize) -> (u32, String) {
    if let Some(g) = flag {
        return (g, "flag".into());
    }
    match std::env::var(GENERATORS_ENV) {
        Ok(v) => match v.trim().parse() {
            Ok(g) => (g, format!("env:{GENERATORS_ENV}")),
            Err(_) => usage_error(ErrorKind::InvalidValue, format!("{GENERATORS_ENV}={v} is not a count")),
        },
        Err(_) => (theorem.default_generators(n), "default".into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    theorem: TheoremSelector,
    n: usize,
    gens: Option<u32>,
    trials: usize,
    seed: u64,
    degree: u32,
    terms: usize,
    min_non_vacuous: f64,
    json: bool,
) -> ExitCode {
    let (generators, source) = generators(gens, theorem, n);
    let mut cfg = TrialConfig::new(theorem, n, trials, seed);
    cfg.generators = generators;
    cfg.generators_source = source;
    cfg.degree = degree;
    cfg.terms = terms;
    cfg.min_non_vacuous = min_non_vacuous;
    if let Err(e) = cfg.validate() {
        usage_error(ErrorKind::ValueValidation, e);
    }
    let report = match run_trials(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        let s = &report.summary;
        println!(
            "{theorem} n={n} G={generators} trials={trials} seed={seed}: {}",
            if s.passed { "all zero" } else { "FAILED" }
        );
        println!(
            "non-vacuous {:.0}% ({} vacuous){}; {} ms",
            100.0 * s.non_vacuous_fraction,
            s.vacuous_count,
            if s.non_vacuity_ok { "" } else { " [below threshold]" },
            s.elapsed_ms
        );
        for t in report.failures() {
            eprintln!("{}", serde_json::to_string(t).expect("serializable"));
        }
    }
    if report.summary.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn read_matrix(path: &PathBuf, config: Option<AlgebraConfig>) -> Result<Matrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Matrix::from_json_str(&text, config).map_err(|e| format!("{}: {e}", path.display()))
}

fn evaluate(theorem: TheoremSelector, a: Option<PathBuf>, b: PathBuf, gens: Option<u32>) -> Result<bool, String> {
    let config = gens.map(AlgebraConfig::e).transpose().map_err(|e| e.to_string())?;
    let mut bm = read_matrix(&b, config)?;
    let mut am = a.as_ref().map(|p| read_matrix(p, config)).transpose()?;
    if config.is_none() {
        // bring both inputs to the larger inferred generator count
        let g = am
            .iter()
            .chain([&bm])
            .map(|m| m.config().generators())
            .max()
            .unwrap_or(1);
        let common = Some(AlgebraConfig::e(g).map_err(|e| e.to_string())?);
        bm = read_matrix(&b, common)?;
        am = a.as_ref().map(|p| read_matrix(p, common)).transpose()?;
    }
    let need_a = || am.as_ref().ok_or_else(|| format!("{theorem} needs --a"));
    let lhs = match theorem {
        TheoremSelector::Thm21 => theorem21_lhs(need_a()?, &bm),
        TheoremSelector::Cor22 => corollary22_lhs(need_a()?, &bm),
        TheoremSelector::Thm23 => theorem23_lhs(&bm),
        TheoremSelector::Cor27 => corollary27_lhs(&bm),
        TheoremSelector::Cor25 => {
            let verdict = corollary25_check(&bm).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&verdict).expect("serializable"));
            return Ok(!matches!(
                verdict,
                supertrace::graded::Corollary25Verdict::Violated { .. }
            ));
        }
    }
    .map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&lhs).expect("serializable"));
    Ok(lhs.is_zero())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            theorem,
            n,
            gens,
            trials,
            seed,
            degree,
            terms,
            min_non_vacuous,
            json,
        } => verify(
            theorem.into(),
            n,
            gens,
            trials,
            seed,
            degree,
            terms,
            min_non_vacuous,
            json,
        ),
        Command::Emit { identity, n, format } => {
            if n == 0 {
                usage_error(ErrorKind::ValueValidation, "n must be at least 1");
            }
            let id = match identity {
                IdentityArg::Thm21 => symbolic_theorem21(n),
                IdentityArg::Thm23 => symbolic_theorem23(n),
            };
            let format = match format {
                FormatArg::Latex => Format::Latex,
                FormatArg::Sexpr => Format::Sexpr,
                FormatArg::Json => Format::Json,
            };
            println!("{}", emit(&id, format));
            ExitCode::SUCCESS
        }
        Command::Evaluate { theorem, a, b, gens } => match evaluate(theorem.into(), a, b, gens) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::FAILURE,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Selftest { json } => {
            let checks = selftest();
            if json {
                println!("{}", serde_json::to_string_pretty(&checks).expect("serializable"));
            } else {
                for c in &checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => println!("{status} {}: {d}", c.name),
                        None => println!("{status} {}", c.name),
                    }
                }
            }
            if checks.iter().all(|c| c.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
