//! Executes every cell × run of a plan, optionally in parallel.

use bbo_core::{AlgorithmId, Benchmark, BenchmarkId, RunRecord};
use rayon::prelude::*;

use crate::config::ExperimentPlan;
use crate::error::{HarnessError, Result};

/// One run of one cell; a failed run keeps its error message.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub algorithm: AlgorithmId,
    pub function: BenchmarkId,
    pub run: usize,
    pub seed: u64,
    pub result: std::result::Result<RunRecord, String>,
}

fn execute(plan: &ExperimentPlan, algorithm: AlgorithmId, function: BenchmarkId, run: usize) -> RunOutcome {
    let config = plan.run_config(algorithm, function, run);
    let bench = Benchmark::get(function);
    let result = bbo_core::run(&config, &bench, &bench.space()).map_err(|e| e.to_string());
    RunOutcome { algorithm, function, run, seed: config.seed, result }
}

/// Runs the plan on `jobs` threads (all cores when `None`). The outcomes are
/// ordered by (algorithm, function, run) in plan order whatever the schedule.
pub fn run_experiment(plan: &ExperimentPlan, jobs: Option<usize>) -> Result<Vec<RunOutcome>> {
    plan.validate()?;
    let tasks: Vec<(AlgorithmId, BenchmarkId, usize)> = plan
        .cells()
        .into_iter()
        .flat_map(|(a, f)| (0..plan.runs).map(move |r| (a, f, r)))
        .collect();
    if jobs == Some(1) {
        return Ok(tasks.into_iter().map(|(a, f, r)| execute(plan, a, f, r)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    Ok(pool.install(|| tasks.par_iter().map(|&(a, f, r)| execute(plan, a, f, r)).collect()))
}
