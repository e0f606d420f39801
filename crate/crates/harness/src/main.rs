use std::path::PathBuf;
use std::process::ExitCode;

use bbo_core::{AlgorithmId, Benchmark, BenchmarkId};
use bbo_harness::{emit_all, parse_config, run_experiment, ExperimentPlan, HarnessError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bbo-bench", version, about = "Run optimizer comparison experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a configuration file.
    Run {
        config: PathBuf,
        /// Output directory.
        #[arg(long, default_value = "results")]
        out: PathBuf,
        /// Base seed; run r uses seed + r.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List algorithm and benchmark ids.
    List,
    /// Print the default configuration.
    ShowDefaults,
}

fn run(config: PathBuf, out: PathBuf, seed: u64, jobs: Option<usize>) -> Result<(), HarnessError> {
    let text = std::fs::read_to_string(&config).map_err(|source| HarnessError::Io { path: config.clone(), source })?;
    let mut plan = parse_config(&text)?;
    plan.base_seed = seed;
    if jobs == Some(0) {
        return Err(HarnessError::Plan("--jobs must be at least 1".into()));
    }
    let cells = plan.cells().len();
    eprintln!("running {cells} cells x {} runs", plan.runs);
    let outcomes = run_experiment(&plan, jobs)?;
    let failed = outcomes.iter().filter(|o| o.result.is_err()).count();
    let written = emit_all(&out, &plan, &outcomes)?;
    eprintln!("wrote {} files to {}", written.len(), out.display());
    if failed > 0 {
        eprintln!("{failed} runs failed, see failures.csv");
    }
    Ok(())
}

fn list() {
    println!("algorithms:");
    for a in AlgorithmId::ALL {
        println!("  {:<4} {}", a.id(), a.name());
    }
    println!("functions:");
    for f in BenchmarkId::all() {
        let b = Benchmark::get(f);
        let (lo, hi) = b.range();
        println!("  {:<4} {:<16} dim {:<3} [{lo}, {hi}]", f.to_string(), f.block().id(), b.dim());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { config, out, seed, jobs } => run(config, out, seed, jobs),
        Command::List => {
            list();
            Ok(())
        }
        Command::ShowDefaults => {
            print!("{}", ExperimentPlan::default().render());
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
