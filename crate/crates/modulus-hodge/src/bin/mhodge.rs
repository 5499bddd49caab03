//! Batch verification front-end: runs named certificate suites over
//! parameter grids and emits human-readable and machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
//! 3 internal error. The worker pool size follows `MHODGE_WORKERS` (or
//! rayon's own `RAYON_NUM_THREADS`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use modulus_hodge::cech::cohomology_dims;
use modulus_hodge::report::VerificationReport;
use modulus_hodge::suites::{run, Grid, Suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "mhodge",
    version,
    about = "Exact verification suites for modulus structure rings, log forms, and Cech cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free generators of the log and twisted form modules.
    Basis(PointArgs),
    /// Modulus ring generators, membership, and filtration exhaustion.
    Membership(PointArgs),
    /// Divisor-reduction short exact sequences.
    SesCheck(PointArgs),
    /// The split sequence over the three cube charts.
    CubeCheck(PointArgs),
    /// Twisted line bundles on projective space and the origin blow-up.
    ProjCoh(PointArgs),
    /// Blow-up comparison, twist bounds, and direct-image vanishing.
    BlowupCheck(PointArgs),
    /// Valuation and form squares of a Kummer cover of dvrs.
    DvrCheck(PointArgs),
    /// Basis bijection for tensor products of pairs.
    KunnethCheck(PointArgs),
    /// Every suite in sequence.
    All(PointArgs),
    /// Run a suite by name (same names as the subcommands).
    Run {
        suite: String,
        #[command(flatten)]
        args: PointArgs,
    },
}

impl Command {
    fn suite_and_args(self) -> Result<(Suite, PointArgs), String> {
        Ok(match self {
            Command::Basis(a) => (Suite::Basis, a),
            Command::Membership(a) => (Suite::Membership, a),
            Command::SesCheck(a) => (Suite::SesCheck, a),
            Command::CubeCheck(a) => (Suite::CubeCheck, a),
            Command::ProjCoh(a) => (Suite::ProjCoh, a),
            Command::BlowupCheck(a) => (Suite::BlowupCheck, a),
            Command::DvrCheck(a) => (Suite::DvrCheck, a),
            Command::KunnethCheck(a) => (Suite::KunnethCheck, a),
            Command::All(a) => (Suite::All, a),
            Command::Run { suite, args } => (
                Suite::from_name(&suite).ok_or_else(|| format!("unknown suite {suite:?}"))?,
                args,
            ),
        })
    }
}

#[derive(Args)]
struct PointArgs {
    /// Pin the variable count.
    #[arg(long)]
    n: Option<usize>,
    /// Pin the modulus exponents, comma separated (e.g. `--r 2,0,1`).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    r: Option<Vec<i64>>,
    /// Pin the form degree.
    #[arg(long)]
    q: Option<usize>,
    /// Pin the line-bundle twist (proj-coh).
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    /// Pin the ramification index (dvr-check).
    #[arg(long)]
    e: Option<i64>,
    /// Degree window half-width.
    #[arg(long)]
    window: Option<i64>,
    /// Use the default quick grid (this is already the default).
    #[arg(long)]
    quick: bool,
    /// Use the larger full grid.
    #[arg(long, conflicts_with = "quick")]
    full: bool,
    /// Seed for the randomized property points.
    #[arg(long, default_value_t = 2026)]
    seed: u64,
    /// Also write the reports as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn build_config(suite: Suite, args: &PointArgs) -> Result<SuiteConfig, String> {
    let mut grid = if args.full { Grid::full() } else { Grid::quick() };
    if let Some(r) = &args.r {
        if r.iter().any(|&v| v < 0) {
            return Err("modulus exponents must be nonnegative".into());
        }
        if let Some(n) = args.n {
            if n != r.len() {
                return Err(format!(
                    "--n {n} conflicts with --r of length {}",
                    r.len()
                ));
            }
        }
        grid.pinned_n = Some(r.len());
        grid.pinned_r = Some(r.clone());
    } else if let Some(n) = args.n {
        if n == 0 {
            return Err("--n must be positive".into());
        }
        grid.pinned_n = Some(n);
    }
    grid.pinned_q = args.q;
    grid.pinned_twist = args.d;
    grid.pinned_ramification = args.e;
    if let Some(w) = args.window {
        if w < 1 {
            return Err("--window must be at least 1".into());
        }
        grid.window = w;
    }
    Ok(SuiteConfig {
        suite,
        grid,
        seed: args.seed,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (suite, args) = match cli.command.suite_and_args() {
        Ok(pair) => pair,
        Err(msg) => {
            eprintln!("usage error: {msg}");
            return ExitCode::from(2);
        }
    };
    let config = match build_config(suite, &args) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("usage error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Ok(workers) = std::env::var("MHODGE_WORKERS") {
        match workers.parse::<usize>() {
            Ok(w) if w > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
            }
            _ => {
                eprintln!("usage error: MHODGE_WORKERS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }

    match std::panic::catch_unwind(|| execute(&config, &args)) {
        Ok(Ok(all_passed)) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Err(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("internal error: unexpected panic");
            ExitCode::from(3)
        }
    }
}

fn execute(config: &SuiteConfig, args: &PointArgs) -> Result<bool, String> {
    let reports = run(config);
    let mut tables = Vec::new();
    // Dimension tables accompany the projective-space suite.
    if matches!(config.suite, Suite::ProjCoh | Suite::All) {
        for n in grid_ns(config) {
            for d in grid_twists(config) {
                let dims = cohomology_dims(n, d);
                tables.push(serde_json::json!({
                    "n": n,
                    "d": d,
                    "dims": dims.dims,
                }));
            }
        }
    }

    for report in &reports {
        println!("{report}");
    }
    if !tables.is_empty() && config.grid.pinned_twist.is_some() {
        for t in &tables {
            println!(
                "H^*(P^{}, O({})) dims: {}",
                t["n"], t["d"],
                serde_json::to_string(&t["dims"]).unwrap()
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} checks, {} failed{}",
        reports.len(),
        failed,
        if failed == 0 { " -- all pass" } else { "" }
    );

    if let Some(path) = &args.json {
        for r in &reports {
            VerificationReport::validate_json(&r.to_json())
                .map_err(|e| format!("report failed schema validation: {e}"))?;
        }
        let doc = serde_json::json!({
            "suite": config.suite,
            "seed": config.seed,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "tables": tables,
        });
        std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(failed == 0)
}

fn grid_ns(config: &SuiteConfig) -> Vec<usize> {
    match config.grid.pinned_n {
        Some(n) => vec![n],
        None => (1..=config.grid.max_vars.min(3)).collect(),
    }
}

fn grid_twists(config: &SuiteConfig) -> Vec<i64> {
    match config.grid.pinned_twist {
        Some(d) => vec![d],
        None => (-config.grid.max_twist..=config.grid.max_twist).collect(),
    }
}
