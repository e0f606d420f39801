//! Experiment runner for the `bbo-core` optimizers: plan parsing, seeded
//! batch execution and the convergence/summary/rank output files.

pub mod config;
pub mod emit;
pub mod error;
pub mod runner;

pub use config::{parse_config, ExperimentPlan};
pub use emit::{emit_all, summarize, BlockTable};
pub use error::{HarnessError, Result};
pub use runner::{run_experiment, RunOutcome};
