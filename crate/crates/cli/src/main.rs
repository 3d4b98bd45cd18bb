//! `mf4`: command-line verifier for the mod-4 congruence suite.
//!
//! `mf4 qexp <form> --prec N [--mod M]` prints exact (or reduced)
//! q-expansion coefficients; `mf4 check <name> [flags]` runs one group of
//! verification sweeps; `mf4 check all --report out.json` runs the whole
//! registry and writes a machine-readable report.
//!
//! Exit status: 0 when every executed check passes, 1 when any fails,
//! 2 for usage or parameter errors.

mod checks;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use checks::{run_checks, Config, REGISTRY};
use mf4_core::qseries;
use report::{CheckResult, RunReport, Verdict};

#[derive(Parser)]
#[command(
    name = "mf4",
    version,
    about = "Exact-arithmetic verifier for congruences of modular forms modulo 4"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores); results
    /// do not depend on this value.
    #[arg(long, global = true, env = "MF4_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first coefficients of a named q-expansion
    Qexp {
        /// Which series to expand
        #[arg(value_enum)]
        form: FormName,
        /// Number of coefficients to print (indices 0 .. prec-1)
        #[arg(long)]
        prec: usize,
        /// Reduce termwise modulo 2^M before printing
        #[arg(long = "mod", value_name = "M")]
        modulus: Option<u32>,
    },
    /// Run verification checks
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormName {
    E4,
    E6,
    Delta,
    F,
    Delta3,
    DForm,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Weak-eigenform property of f mod 4 over T_n, n in {2..7, 9}
    WeakEigenform {
        /// Coefficients compared per operator
        #[arg(long, default_value_t = 300)]
        bound: usize,
    },
    /// The l mod 8 rule for prime coefficients of f mod 4
    FRule {
        #[arg(long = "max-prime", env = "MF4_MAX_PRIME", default_value_t = 3000)]
        max_prime: u64,
    },
    /// Sum-of-three-squares counts and the tau congruence
    Squares {
        /// Closed form vs brute force up to this n
        #[arg(long = "max-n", default_value_t = 2000)]
        max_n: u64,
        /// Odd-square representation counts at primes up to this bound
        #[arg(long = "max-prime", default_value_t = 5000)]
        max_prime: u64,
        /// tau(l) congruence checked for odd primes up to this bound
        #[arg(long = "tau-max-prime", default_value_t = 3000)]
        tau_max_prime: u64,
    },
    /// Parity theta series of delta and the cube product identity
    Eta {
        #[arg(long, env = "MF4_SERIES_PREC", default_value_t = 10_000)]
        prec: usize,
    },
    /// Explicit 4-torsion of the curve and its Galois matrices
    Torsion,
    /// Frobenius traces in one dihedral field against the prime rule
    Frobenius {
        #[arg(long, value_enum)]
        field: FieldName,
        #[arg(long = "max-prime", env = "MF4_MAX_PRIME", default_value_t = 3000)]
        max_prime: u64,
    },
    /// Termwise congruence between f and the weight-2 newform mod 4
    Congruence {
        #[arg(long, env = "MF4_CONGRUENCE_BOUND", default_value_t = 4096)]
        bound: usize,
    },
    /// Quadratic twist traces against the Legendre scaling
    Twists {
        #[arg(long = "max-prime", default_value_t = 200)]
        max_prime: u64,
    },
    /// Failure of the weight-1 complex-character congruence
    Weight1 {
        #[arg(long = "max-prime", env = "MF4_MAX_PRIME", default_value_t = 3000)]
        max_prime: u64,
    },
    /// Point-count identity over F_l^2
    FsqIdentity {
        #[arg(long = "max-ell", env = "MF4_FSQ_GUARD", default_value_t = 61)]
        max_ell: u64,
    },
    /// One-dimensional cusp-space generators against delta mod 4
    Hatada {
        #[arg(long, default_value_t = 500)]
        bound: usize,
    },
    /// Every check in registry order
    All(AllArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FieldName {
    K,
    L,
}

#[derive(Args)]
struct AllArgs {
    /// Write the JSON report to this path
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(
        long = "congruence-bound",
        env = "MF4_CONGRUENCE_BOUND",
        default_value_t = 4096
    )]
    congruence_bound: usize,
    #[arg(long = "max-prime", env = "MF4_MAX_PRIME", default_value_t = 3000)]
    max_prime: u64,
    #[arg(
        long = "series-prec",
        env = "MF4_SERIES_PREC",
        default_value_t = 10_000
    )]
    series_prec: usize,
    #[arg(long = "fsq-guard", env = "MF4_FSQ_GUARD", default_value_t = 61)]
    fsq_guard: u64,
    #[arg(long = "weak-bound", default_value_t = 300)]
    weak_bound: usize,
    #[arg(long = "squares-max-n", default_value_t = 2000)]
    squares_max_n: u64,
    #[arg(long = "squares-max-prime", default_value_t = 5000)]
    squares_max_prime: u64,
    #[arg(long = "tau-max-prime", default_value_t = 3000)]
    tau_max_prime: u64,
    #[arg(long = "twists-max-prime", default_value_t = 200)]
    twists_max_prime: u64,
    #[arg(long = "hatada-bound", default_value_t = 500)]
    hatada_bound: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs.filter(|&j| j > 0) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Qexp {
            form,
            prec,
            modulus,
        } => {
            print_expansion(form, prec, modulus)?;
            Ok(true)
        }
        Command::Check(cmd) => run_check_command(cmd),
    }
}

fn print_expansion(form: FormName, prec: usize, modulus: Option<u32>) -> Result<()> {
    let series = match form {
        FormName::E4 => qseries::eisenstein_e4(prec),
        FormName::E6 => qseries::eisenstein_e6(prec),
        FormName::Delta => qseries::delta(prec),
        FormName::F => qseries::build_f(prec),
        FormName::Delta3 => qseries::delta(prec).map(|d| qseries::pow(&d, 3)),
        FormName::DForm => qseries::d_form(prec),
    }
    .with_context(|| format!("cannot build {form:?} at precision {prec}"))?;

    let line = match modulus {
        None => series
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Some(m) => qseries::reduce(&series, m)
            .residues()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(","),
    };
    println!("{line}");
    Ok(())
}

fn run_check_command(cmd: CheckCmd) -> Result<bool> {
    let mut cfg = Config::default();
    let mut report_path = None;
    let names: Vec<&str> = match cmd {
        CheckCmd::WeakEigenform { bound } => {
            cfg.weak_bound = bound;
            vec!["weak-eigenform"]
        }
        CheckCmd::FRule { max_prime } => {
            cfg.max_prime = max_prime;
            vec!["f-rule"]
        }
        CheckCmd::Squares {
            max_n,
            max_prime,
            tau_max_prime,
        } => {
            cfg.squares_max_n = max_n;
            cfg.squares_max_prime = max_prime;
            cfg.tau_max_prime = tau_max_prime;
            vec!["squares-r3", "squares-q3", "kolberg"]
        }
        CheckCmd::Eta { prec } => {
            cfg.series_prec = prec;
            vec!["eta-theta", "eta-jacobi"]
        }
        CheckCmd::Torsion => vec!["torsion"],
        CheckCmd::Frobenius { field, max_prime } => {
            cfg.max_prime = max_prime;
            match field {
                FieldName::K => vec!["frobenius-K"],
                FieldName::L => vec!["frobenius-L"],
            }
        }
        CheckCmd::Congruence { bound } => {
            cfg.congruence_bound = bound;
            vec!["congruence"]
        }
        CheckCmd::Twists { max_prime } => {
            cfg.twists_max_prime = max_prime;
            vec!["twists"]
        }
        CheckCmd::Weight1 { max_prime } => {
            cfg.max_prime = max_prime;
            vec!["weight1"]
        }
        CheckCmd::FsqIdentity { max_ell } => {
            cfg.fsq_guard = max_ell;
            vec!["fsq-identity"]
        }
        CheckCmd::Hatada { bound } => {
            cfg.hatada_bound = bound;
            vec!["hatada"]
        }
        CheckCmd::All(args) => {
            cfg = Config {
                congruence_bound: args.congruence_bound,
                max_prime: args.max_prime,
                series_prec: args.series_prec,
                fsq_guard: args.fsq_guard,
                weak_bound: args.weak_bound,
                squares_max_n: args.squares_max_n,
                squares_max_prime: args.squares_max_prime,
                tau_max_prime: args.tau_max_prime,
                twists_max_prime: args.twists_max_prime,
                hatada_bound: args.hatada_bound,
            };
            report_path = args.report;
            REGISTRY.to_vec()
        }
    };

    let results = run_checks(&names, &cfg);
    for result in &results {
        print_result(result);
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    println!(
        "{} checks: {} passed, {} failed",
        results.len(),
        passed,
        results.len() - passed
    );

    if let Some(path) = report_path {
        let report = RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            defaults: cfg.defaults_map(),
            results: results.clone(),
        };
        fs::write(&path, report.to_json())
            .with_context(|| format!("cannot write report to {}", path.display()))?;
        println!("report written to {}", path.display());
    }
    Ok(passed == results.len())
}

fn print_result(result: &CheckResult) {
    let verdict = match result.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Skipped => "skip",
    };
    let mut line = format!(
        "check {:<18} {} ({} ms)",
        result.name, verdict, result.elapsed_millis
    );
    if let Some(details) = &result.details {
        line.push_str(&format!(" -- {details}"));
    }
    if let Some(witness) = &result.witness {
        let parts: Vec<String> = witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
        line.push_str(&format!(" -- witness: {}", parts.join(", ")));
    }
    println!("{line}");
}
