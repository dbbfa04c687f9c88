//! Command-line driver for the ALE elliptic-genus engine.
//!
//! Emits canonical JSON documents to stdout or `--out PATH`. Exit code 0
//! means every requested computation and check passed (flagged variant
//! discrepancies included); 1 means a hard failure; 2 a usage error.

mod commands;
mod config;
mod report;

use clap::{Parser, Subcommand};

use config::{effective_backend, resolve, Settings};

#[derive(Parser)]
#[command(
    name = "ale-genus",
    version,
    about = "Equivariant elliptic genera of A-type ALE spaces: exact q-expansions, \
             regularization, and a machine-verification suite"
)]
struct Cli {
    /// Flat TOML config file; flags and ALE_GENUS_* env vars override it.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[arg(long, global = true)]
    r: Option<usize>,

    #[arg(long, global = true)]
    q_order: Option<i64>,

    #[arg(long, global = true)]
    v_order: Option<i64>,

    /// exact | numeric (defaults to whatever the command needs).
    #[arg(long, global = true)]
    backend: Option<String>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Sample count for numeric checks.
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Complex parameters as "re,im".
    #[arg(long, global = true)]
    tau: Option<String>,

    #[arg(long, global = true)]
    z: Option<String>,

    #[arg(long, global = true)]
    t1: Option<String>,

    #[arg(long, global = true)]
    t2: Option<String>,

    /// Base probe distance for residue estimation.
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    /// Candidate pole window: |m|, |n| up to this.
    #[arg(long, global = true)]
    lattice_range: Option<i64>,

    #[arg(long, global = true)]
    tol_theta_identity: Option<f64>,

    #[arg(long, global = true)]
    tol_expansion_coeff: Option<f64>,

    #[arg(long, global = true)]
    tol_residue_cancel: Option<f64>,

    #[arg(long, global = true)]
    tol_residue_genuine: Option<f64>,

    /// Pin the report timestamp (for byte-identical reruns).
    #[arg(long, global = true)]
    timestamp: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numeric value of the two-parameter equivariant genus at a point.
    Genus,
    /// Exact expansion: coefficient tables for the alpha-hat series.
    Expand,
    /// Exact regularized genus; --k3-compare adds the proportionality check.
    Regularized {
        #[arg(long)]
        k3_compare: bool,
    },
    /// K3 elliptic genus table and the exact proportionality check.
    K3Compare,
    /// Run the full verification suite.
    VerifyAll,
    /// Run one named check.
    Verify { check: String },
    /// Residue scan over candidate poles in t1.
    ScanPoles,
    /// The eight transformation laws at sampled points.
    ModularCheck,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Genus => "genus",
            Command::Expand => "expand",
            Command::Regularized { .. } => "regularized",
            Command::K3Compare => "k3-compare",
            Command::VerifyAll => "verify-all",
            Command::Verify { .. } => "verify",
            Command::ScanPoles => "scan-poles",
            Command::ModularCheck => "modular-check",
        }
    }
}

fn settings_from_flags(cli: &Cli) -> Settings {
    Settings {
        r: cli.r,
        q_order: cli.q_order,
        v_order: cli.v_order,
        backend: cli.backend.clone(),
        seed: cli.seed,
        samples: cli.samples,
        tau: cli.tau.clone(),
        z: cli.z.clone(),
        t1: cli.t1.clone(),
        t2: cli.t2.clone(),
        epsilon: cli.epsilon,
        lattice_range: cli.lattice_range,
        tol_theta_identity: cli.tol_theta_identity,
        tol_expansion_coeff: cli.tol_expansion_coeff,
        tol_residue_cancel: cli.tol_residue_cancel,
        tol_residue_genuine: cli.tol_residue_genuine,
        out: cli.out.clone(),
        timestamp: cli.timestamp.clone(),
    }
}

fn usage_exit(message: impl std::fmt::Display) -> ! {
    eprintln!("usage error: {message}");
    std::process::exit(2)
}

fn main() {
    let cli = Cli::parse();

    let mut settings = Settings::default();
    if let Some(path) = &cli.config {
        match Settings::from_file(path) {
            Ok(s) => settings = settings.overridden_by(s),
            Err(e) => usage_exit(e),
        }
    }
    match Settings::from_env() {
        Ok(s) => settings = settings.overridden_by(s),
        Err(e) => usage_exit(e),
    }
    settings = settings.overridden_by(settings_from_flags(&cli));

    let resolved = match resolve(settings) {
        Ok(r) => r,
        Err(e) => usage_exit(e),
    };
    if let Err(e) = effective_backend(cli.command.name(), resolved.backend) {
        usage_exit(e);
    }

    let outcome = match &cli.command {
        Command::Genus => commands::genus(&resolved),
        Command::Expand => commands::expand(&resolved),
        Command::Regularized { k3_compare } => commands::regularized(&resolved, *k3_compare),
        Command::K3Compare => commands::k3_compare(&resolved),
        Command::VerifyAll => commands::verify_all(&resolved),
        Command::Verify { check } => match commands::verify_named(&resolved, check) {
            Ok(outcome) => outcome,
            Err(e) => usage_exit(e),
        },
        Command::ScanPoles => commands::scan_poles(&resolved),
        Command::ModularCheck => commands::modular_check(&resolved),
    };

    let text = report::render(&outcome.document);
    match &resolved.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write report to {}: {e}", path.display());
                std::process::exit(1);
            }
        }
        None => print!("{text}"),
    }
    std::process::exit(if outcome.any_failure { 1 } else { 0 });
}
