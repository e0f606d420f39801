//! Bombardier beetle optimizer, six comparison metaheuristics, the 23 classic
//! benchmark functions and the statistics used to compare them.

pub mod baselines;
pub mod bbo;
pub mod benchmarks;
pub mod error;
pub mod kernels;
pub mod objective;
pub mod optimizer;
pub mod population;
pub mod random_search;
pub mod rng;
pub mod space;
pub mod stats;

pub use bbo::{Bbo, BboParams, PredatorMode};
pub use benchmarks::{known_optimum, reported_optimum, Benchmark, BenchmarkId, Block};
pub use error::{Error, Result};
pub use kernels::{ChaosMap, SprayExponent};
pub use objective::{FnObjective, Objective};
pub use optimizer::{run, AlgorithmId, Optimizer, Run, RunConfig, RunRecord, StepContext};
pub use population::{Agent, Population};
pub use random_search::random_search;
pub use rng::{DrawSource, RandomStream, ScriptedDraws};
pub use space::{BoundMode, SearchSpace};
