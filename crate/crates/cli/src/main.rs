use chain_cli::commands;
use chain_cli::config::{Engine, RunConfig};
use chain_cli::Result;
use clap::{Parser, Subcommand};
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

/// Exact and numerical solvers for a long chain of identical particles
/// coupled by nearest-neighbour elastic forces, with its continuum limit.
#[derive(Parser)]
#[command(name = "chain", version)]
struct Cli {
    /// `key = value` configuration file; flags below override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Number of particles.
    #[arg(long = "N", global = true, value_name = "COUNT")]
    n: Option<usize>,

    /// Final time.
    #[arg(long = "T", global = true, value_name = "TIME")]
    t_max: Option<f64>,

    /// Macroscopic stiffness; each spring oscillates at this frequency
    /// times the particle count.
    #[arg(long, global = true, value_name = "FREQ")]
    omega_prime: Option<f64>,

    /// Seed for the random initial profile.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    /// "spectral" (exact mode sums) or "verlet" (explicit time stepping).
    #[arg(long, global = true, value_parser = Engine::from_str, value_name = "ENGINE")]
    engine: Option<Engine>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print particle positions and velocities at sampled times.
    Simulate,
    /// Print the continuum fields across the chain at the final time.
    Fields,
    /// Print deviation errors against the continuum for each size in N_list.
    Converge,
    /// Print the density deviation surface rho(t, y) - 1.
    ExperimentDensity,
    /// Run consistency checks and report PASS/FAIL per check.
    Verify,
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(n) = cli.n {
        cfg.n = n;
    }
    if let Some(t) = cli.t_max {
        cfg.t_max = t;
    }
    if let Some(op) = cli.omega_prime {
        cfg.omega_prime = Some(op);
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(engine) = cli.engine {
        cfg.engine = engine;
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = load_config(cli)?;
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let ok = match cli.command {
        Command::Simulate => {
            commands::cmd_simulate(&cfg, &mut sink)?;
            true
        }
        Command::Fields => {
            commands::cmd_fields(&cfg, &mut sink)?;
            true
        }
        Command::Converge => {
            commands::cmd_converge(&cfg, &mut sink)?;
            true
        }
        Command::ExperimentDensity => {
            commands::cmd_experiment_density(&cfg, &mut sink)?;
            true
        }
        Command::Verify => commands::cmd_verify(&cfg, &mut sink)?,
    };
    sink.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
