use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kummer_verify::modularity::lseries::read_qexpansion_file;
use kummer_verify::modularity::ModularityOptions;
use kummer_verify::report::{emit_report, Format};
use kummer_verify::suites::{run_suite, SuiteName, SuiteOptions};

/// Run verification suites and print a report. Exits with status 1 when any
/// claim fails.
#[derive(Parser, Debug)]
#[command(name = "kummer-verify", version)]
struct Cli {
    #[command(subcommand)]
    suite: Suite,

    /// Largest prime used by the modularity suite.
    #[arg(long, global = true, default_value_t = 200)]
    p_max: u64,

    /// Degree bound for both invariant generation oracles (defaults 12 and 14).
    #[arg(long, global = true)]
    degree_bound: Option<u32>,

    /// Split primes up to this bound train the calibration; larger ones test it.
    #[arg(long, global = true, default_value_t = 50)]
    calibration_split: u64,

    /// Integer coefficients, one per line, to compare against the computed series.
    #[arg(long, global = true)]
    qexp_file: Option<PathBuf>,

    /// Output format: json, markdown or csv.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Worker threads for point counting.
    #[arg(long, global = true, env = "KUMMER_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Suite {
    /// Relations, closure orders and quartic invariance of the order-168 group.
    Group,
    /// CM tori, the eta-basis matrices and fixed subgroups.
    Torus,
    /// Tangent divisors, coordinate maps and differential pullbacks on the quartic.
    Curve,
    /// The invariant 3-forms and the intermediate Jacobian.
    Cohomology,
    /// Invariant rings, toric charts and generation oracles.
    Quotients,
    /// Frobenius traces, character calibration and Euler factors.
    Modularity,
    /// Every suite, merged into one report.
    All,
}

impl From<Suite> for SuiteName {
    fn from(s: Suite) -> Self {
        match s {
            Suite::Group => SuiteName::Group,
            Suite::Torus => SuiteName::Torus,
            Suite::Curve => SuiteName::Curve,
            Suite::Cohomology => SuiteName::Cohomology,
            Suite::Quotients => SuiteName::Quotients,
            Suite::Modularity => SuiteName::Modularity,
            Suite::All => SuiteName::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let qexp = match &cli.qexp_file {
        Some(path) => match read_qexpansion_file(path) {
            Ok(q) => Some(q),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let opts = SuiteOptions {
        modularity: ModularityOptions {
            p_max: cli.p_max,
            calibration_split: cli.calibration_split,
            qexp,
            ..ModularityOptions::default()
        },
        degree_bound: cli.degree_bound,
    };
    let report = run_suite(cli.suite.into(), &opts);
    let bytes = match emit_report(&report, cli.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if std::io::stdout().write_all(&bytes).is_err() {
        return ExitCode::from(2);
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
