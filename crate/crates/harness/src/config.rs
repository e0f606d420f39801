//! Line-oriented experiment configuration.
//!
//! ```text
//! # comments start with '#'
//! algorithms = bbo, pso, gwo
//! functions = f1, f9-f13
//! runs = 10
//! ```
//!
//! Lists are comma separated; `all` selects everything and function ranges
//! like `f14-f23` are accepted. Unspecified keys keep their defaults.

use std::fmt::Write as _;

use bbo_core::stats::RankStatistic;
use bbo_core::{AlgorithmId, BenchmarkId, BoundMode, ChaosMap, PredatorMode, RunConfig};

use crate::error::{HarnessError, Result};

pub const KEYS: [&str; 9] = [
    "algorithms",
    "functions",
    "runs",
    "population",
    "iterations",
    "chaos_map",
    "predator_mode",
    "bound_mode",
    "rank_statistic",
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub algorithms: Vec<AlgorithmId>,
    pub functions: Vec<BenchmarkId>,
    pub runs: usize,
    pub population: usize,
    pub iterations: usize,
    pub chaos_map: ChaosMap,
    pub predator: PredatorMode,
    pub bound_mode: BoundMode,
    pub rank_statistic: RankStatistic,
    /// Run `r` of every cell uses seed `base_seed + r`.
    pub base_seed: u64,
}

impl Default for ExperimentPlan {
    fn default() -> Self {
        Self {
            algorithms: AlgorithmId::ALL.to_vec(),
            functions: BenchmarkId::all().collect(),
            runs: 10,
            population: 30,
            iterations: 1000,
            chaos_map: ChaosMap::default(),
            predator: PredatorMode::default(),
            bound_mode: BoundMode::default(),
            rank_statistic: RankStatistic::default(),
            base_seed: 0,
        }
    }
}

impl ExperimentPlan {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(HarnessError::Plan(m));
        if self.algorithms.is_empty() {
            return fail("no algorithms selected".into());
        }
        if self.functions.is_empty() {
            return fail("no functions selected".into());
        }
        if self.runs == 0 {
            return fail("runs must be at least 1".into());
        }
        if self.iterations == 0 {
            return fail("iterations must be at least 1".into());
        }
        let min = self.algorithms.iter().map(|a| a.min_population()).max().unwrap_or(1).max(2);
        if self.population < min {
            return fail(format!("population must be at least {min} for the selected algorithms"));
        }
        Ok(())
    }

    /// Every (algorithm, function) pair, algorithm-major.
    pub fn cells(&self) -> Vec<(AlgorithmId, BenchmarkId)> {
        self.algorithms
            .iter()
            .flat_map(|&a| self.functions.iter().map(move |&f| (a, f)))
            .collect()
    }

    pub fn seed_for(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    pub fn run_config(&self, algorithm: AlgorithmId, function: BenchmarkId, run: usize) -> RunConfig {
        let mut c = RunConfig::new(algorithm);
        c.objective = function.to_string();
        c.population = self.population;
        c.max_iterations = self.iterations;
        c.seed = self.seed_for(run);
        c.chaos_map = self.chaos_map;
        c.predator = self.predator;
        c.bound_mode = self.bound_mode;
        c
    }

    /// The plan in configuration syntax; parsing it gives the plan back.
    pub fn render(&self) -> String {
        let join = |v: Vec<String>| v.join(", ");
        let mut s = String::new();
        let _ = writeln!(s, "algorithms = {}", join(self.algorithms.iter().map(|a| a.to_string()).collect()));
        let _ = writeln!(s, "functions = {}", join(self.functions.iter().map(|f| f.to_string()).collect()));
        let _ = writeln!(s, "runs = {}", self.runs);
        let _ = writeln!(s, "population = {}", self.population);
        let _ = writeln!(s, "iterations = {}", self.iterations);
        let _ = writeln!(s, "chaos_map = {}", self.chaos_map);
        let _ = writeln!(s, "predator_mode = {}", self.predator);
        let _ = writeln!(s, "bound_mode = {}", self.bound_mode);
        let _ = writeln!(s, "rank_statistic = {}", self.rank_statistic);
        s
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn parse_functions(value: &str) -> std::result::Result<Vec<BenchmarkId>, String> {
    let mut out = Vec::new();
    for item in list(value) {
        if item == "all" {
            out.extend(BenchmarkId::all());
        } else if let Some((a, b)) = item.split_once('-') {
            let lo: BenchmarkId = a.trim().parse().map_err(|e: bbo_core::Error| e.to_string())?;
            let hi: BenchmarkId = b.trim().parse().map_err(|e: bbo_core::Error| e.to_string())?;
            if lo.index() > hi.index() {
                return Err(format!("empty range {item}"));
            }
            out.extend((lo.index()..=hi.index()).map(|i| BenchmarkId::new(i).unwrap()));
        } else {
            out.push(item.parse().map_err(|e: bbo_core::Error| e.to_string())?);
        }
    }
    Ok(out)
}

fn parse_algorithms(value: &str) -> std::result::Result<Vec<AlgorithmId>, String> {
    let mut out = Vec::new();
    for item in list(value) {
        if item == "all" {
            out.extend(AlgorithmId::ALL);
        } else {
            out.push(item.parse().map_err(|e: bbo_core::Error| e.to_string())?);
        }
    }
    Ok(out)
}

fn dedup<T: PartialEq + Copy>(items: Vec<T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(items.len());
    for x in items {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn count(value: &str) -> std::result::Result<usize, String> {
    value.parse().map_err(|_| format!("expected a non-negative integer, got {value:?}"))
}

fn parsed<T: std::str::FromStr<Err = bbo_core::Error>>(value: &str) -> std::result::Result<T, String> {
    value.parse().map_err(|e: bbo_core::Error| e.to_string())
}

pub fn parse_config(text: &str) -> Result<ExperimentPlan> {
    let mut plan = ExperimentPlan::default();
    let mut seen: Vec<&str> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| HarnessError::Config { line, message };
        let (key, value) = content.split_once('=').ok_or_else(|| err(format!("expected `key = value`, got {content:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let key = KEYS.into_iter().find(|&k| k == key).ok_or_else(|| err(format!("unknown key {key:?}")))?;
        if seen.contains(&key) {
            return Err(err(format!("duplicate key {key:?}")));
        }
        seen.push(key);
        if value.is_empty() {
            return Err(err(format!("missing value for {key}")));
        }
        let applied = match key {
            "algorithms" => parse_algorithms(value).map(|v| plan.algorithms = dedup(v)),
            "functions" => parse_functions(value).map(|v| plan.functions = dedup(v)),
            "runs" => count(value).map(|v| plan.runs = v),
            "population" => count(value).map(|v| plan.population = v),
            "iterations" => count(value).map(|v| plan.iterations = v),
            "chaos_map" => parsed(value).map(|v| plan.chaos_map = v),
            "predator_mode" => parsed(value).map(|v| plan.predator = v),
            "bound_mode" => parsed(value).map(|v| plan.bound_mode = v),
            _ => parsed(value).map(|v| plan.rank_statistic = v),
        };
        applied.map_err(err)?;
    }
    plan.validate()?;
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_default() {
        let plan = parse_config("").unwrap();
        assert_eq!(plan, ExperimentPlan::default());
        assert_eq!(plan.cells().len(), 161);
        assert_eq!(plan.cells().len() * plan.runs, 1610);
    }

    #[test]
    fn restriction() {
        let plan = parse_config("algorithms = bbo\nfunctions = f1").unwrap();
        assert_eq!(plan.cells(), vec![(AlgorithmId::Bbo, BenchmarkId::new(1).unwrap())]);
    }

    #[test]
    fn zero_runs_rejected() {
        assert!(matches!(parse_config("runs = 0"), Err(HarnessError::Plan(_))));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("# header\n\nspeed = 3", 3),
            ("runs = 3\nalgorithms = bbo, abc", 2),
            ("functions = f24", 1),
            ("runs = ten", 1),
            ("runs = 2\nruns = 3", 2),
            ("population", 1),
            ("chaos_map = logistic", 1),
        ];
        for (text, want) in cases {
            match parse_config(text) {
                Err(HarnessError::Config { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn ranges_comments_and_options() {
        let text = "functions = f14-f16, f1 # trailing\nalgorithms = all\npredator_mode = random-agent\nbound_mode = reflect\nrank_statistic = mean\nchaos_map = circle";
        let plan = parse_config(text).unwrap();
        let ids: Vec<u8> = plan.functions.iter().map(|f| f.index()).collect();
        assert_eq!(ids, vec![14, 15, 16, 1]);
        assert_eq!(plan.predator, PredatorMode::RandomAgent);
        assert_eq!(plan.bound_mode, BoundMode::Reflect);
        assert_eq!(plan.rank_statistic, RankStatistic::Mean);
        assert_eq!(plan.chaos_map, ChaosMap::Circle);
    }

    #[test]
    fn population_floor() {
        assert!(parse_config("population = 1").is_err());
        assert!(parse_config("algorithms = gwo\npopulation = 2").is_err());
        assert!(parse_config("algorithms = bbo\npopulation = 2").is_ok());
    }

    #[test]
    fn render_round_trips() {
        let mut plan = ExperimentPlan::default();
        plan.functions.truncate(4);
        plan.runs = 3;
        plan.chaos_map = ChaosMap::Singer;
        assert_eq!(parse_config(&plan.render()).unwrap(), plan);
    }

    #[test]
    fn seeds_offset_from_base() {
        let plan = ExperimentPlan { base_seed: 100, ..ExperimentPlan::default() };
        let c = plan.run_config(AlgorithmId::Pso, BenchmarkId::new(3).unwrap(), 4);
        assert_eq!(c.seed, 104);
        assert_eq!(c.objective, "f3");
    }
}
