//! The `hopf` command line: builds the algebras, runs their check suites and
//! writes JSON reports. Exit codes: 0 pass, 1 failed check, 2 usage error.

mod classical;
mod config;
mod contract;
mod report;
mod scatter;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use classical::{cmd_classical, ClassicalArgs};
pub use config::{check_order, configure_threads, parse_real, parse_scalar, AlgebraId, CliError, MAX_ORDER};
pub use contract::{cmd_contract_residual, ContractArgs};
pub use report::{Entry, Report, Status};
pub use scatter::{cmd_scatter, parse_momentum, ScatterArgs};
pub use verify::{cmd_verify, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "hopf", version, about = "Verify quantum-group constructions and write JSON reports")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Confluence, Hopf axioms and R-matrix checks for one algebra.
    Verify(VerifyOpts),
    /// Momentum map of the 3D kappa-Poincare R-matrix with its conservation laws.
    Scatter(ScatterOpts),
    /// Residual ratios of the contraction from the sl(2) pair.
    ContractResidual(ContractOpts),
    /// Classical r-matrix identities for iso(3) and iso(d).
    Classical(ClassicalOpts),
}

#[derive(Debug, Args)]
pub struct VerifyOpts {
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraId>,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub xi: String,
    /// Deformation parameter: α for uq_sl2, ε for sl2_tensor and d21e.
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    /// Also run the hexagon checks.
    #[arg(long)]
    pub strict: bool,
    /// Verify a saved algebra definition instead of a built-in algebra.
    #[arg(long, conflicts_with = "algebra")]
    pub definition: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BranchOpt {
    Principal,
    Shifted,
}

#[derive(Debug, Args)]
pub struct ScatterOpts {
    /// Incoming p as `[[re, im], [re, im], [re, im]]` for (p0, p+, p-).
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    /// Exact complex scalar, e.g. `2` or `10i`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value = "principal")]
    pub branch: BranchOpt,
    /// Seed for the batch run used when --p and --q are absent.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PairingOpt {
    Product,
    InverseOpposite,
}

#[derive(Debug, Args)]
pub struct ContractOpts {
    #[arg(long, default_value = "1/10", allow_hyphen_values = true)]
    pub epsilon: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    /// Sign in ε̃ = βε + ξε².
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub beta: i64,
    #[arg(long, value_enum, default_value = "product")]
    pub pairing: PairingOpt,
}

#[derive(Debug, Args)]
pub struct ClassicalOpts {
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub xi: String,
    /// Comma-separated exact components of n.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Verify(o) => cmd_verify(&VerifyConfig {
            algebra: o.algebra,
            order: o.order,
            xi: o.xi.clone(),
            epsilon: o.epsilon.clone(),
            strict: o.strict,
            definition: o.definition.clone(),
        }),
        Command::Scatter(o) => cmd_scatter(&ScatterArgs {
            p: o.p.clone(),
            q: o.q.clone(),
            kappa: o.kappa.clone(),
            tolerance: o.tolerance,
            branch: match o.branch {
                BranchOpt::Principal => kappa_scattering::Branch::Principal,
                BranchOpt::Shifted => kappa_scattering::Branch::Shifted,
            },
            seed: o.seed,
            samples: o.samples,
        }),
        Command::ContractResidual(o) => cmd_contract_residual(&ContractArgs {
            epsilon: o.epsilon.clone(),
            xi: o.xi.clone(),
            order: o.order,
            beta: o.beta,
            pairing: match o.pairing {
                PairingOpt::Product => rmatrix::Pairing::Product,
                PairingOpt::InverseOpposite => rmatrix::Pairing::InverseOpposite,
            },
        }),
        Command::Classical(o) => cmd_classical(&ClassicalArgs { d: o.d, xi: o.xi.clone(), n: o.n.clone() }),
    }
}

/// Outcome of one invocation: exit code, text for stdout, text for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `--out` when given.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = configure_threads().and_then(|()| execute(&cli.command));
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let json = report.to_json();
    match &cli.out {
        Some(path) => match std::fs::write(path, format!("{json}\n")) {
            Ok(()) => Outcome { code: report.exit_code(), stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code: report.exit_code(), stdout: format!("{json}\n"), stderr: String::new() },
    }
}
