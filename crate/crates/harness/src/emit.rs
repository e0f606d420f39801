//! Output files: convergence traces, per-block summary tables and rank data.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use bbo_core::stats::{format_mean_rank, total_mean_rank, BlockRanks, RankStatistic, Summary};
use bbo_core::{AlgorithmId, BenchmarkId, Block};

use crate::config::ExperimentPlan;
use crate::error::{io_at, Result};
use crate::runner::RunOutcome;

/// Scientific notation in the style of the result tables: `7.12E+04`, `2.29E-262`.
pub fn table_sci(value: f64, decimals: usize) -> String {
    if !value.is_finite() {
        return format!("{value}");
    }
    let raw = format!("{value:.decimals$e}");
    let (mantissa, exp) = raw.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

/// Round-trip rendering (17 significant digits).
pub fn exact(value: f64) -> String {
    format!("{value:.16e}")
}

type Column = fn(&Summary) -> f64;

const STATISTICS: [(&str, Column); 4] =
    [("Best", |s| s.best), ("Mean", |s| s.mean), ("Worst", |s| s.worst), ("Std", |s| s.std)];

/// The Best/Mean/Worst/Std/Rank table of one function block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockTable {
    pub block: Block,
    pub algorithms: Vec<AlgorithmId>,
    pub functions: Vec<BenchmarkId>,
    /// `summaries[f][a]`.
    pub summaries: Vec<Vec<Summary>>,
    pub ranks: BlockRanks,
}

impl BlockTable {
    pub fn new(
        block: Block,
        algorithms: Vec<AlgorithmId>,
        functions: Vec<BenchmarkId>,
        summaries: Vec<Vec<Summary>>,
        statistic: RankStatistic,
    ) -> Result<Self> {
        let ranks = BlockRanks::from_summaries(&summaries, statistic)?;
        Ok(Self { block, algorithms, functions, summaries, ranks })
    }

    fn rows(&self, decimals: usize) -> Vec<Vec<String>> {
        let mut rows = vec![];
        let mut header = vec!["function".to_string(), "statistic".to_string()];
        header.extend(self.algorithms.iter().map(|a| a.id().to_uppercase()));
        rows.push(header);
        for (k, f) in self.functions.iter().enumerate() {
            for (label, get) in STATISTICS {
                let mut row = vec![f.to_string().to_uppercase(), label.to_string()];
                row.extend(self.summaries[k].iter().map(|s| table_sci(get(s), decimals)));
                rows.push(row);
            }
            let mut row = vec![f.to_string().to_uppercase(), "Rank".to_string()];
            row.extend(self.ranks.ranks[k].iter().map(|r| r.to_string()));
            rows.push(row);
        }
        let mut sum = vec!["Sum Rank".to_string(), String::new()];
        sum.extend(self.ranks.sum.iter().map(|s| s.to_string()));
        rows.push(sum);
        let mut mean = vec!["Mean Rank".to_string(), String::new()];
        mean.extend(self.ranks.mean.iter().map(|&m| format_mean_rank(m)));
        rows.push(mean);
        rows
    }

    pub fn render_csv(&self) -> String {
        self.rows(6).iter().map(|r| r.join(",") + "\n").collect()
    }

    pub fn render_text(&self) -> String {
        let rows = self.rows(2);
        let width: Vec<usize> = (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap()).collect();
        let mut out = String::new();
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, v)| if c < 2 { format!("{v:<w$}", w = width[c]) } else { format!("{v:>w$}", w = width[c]) })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

fn finals(outcomes: &[RunOutcome], a: AlgorithmId, f: BenchmarkId) -> Vec<f64> {
    outcomes
        .iter()
        .filter(|o| o.algorithm == a && o.function == f)
        .filter_map(|o| o.result.as_ref().ok().map(|r| r.final_best))
        .collect()
}

/// Summary of each cell's successful runs; a cell without any is all NaN.
pub fn cell_summary(outcomes: &[RunOutcome], a: AlgorithmId, f: BenchmarkId) -> Summary {
    Summary::from_values(&finals(outcomes, a, f))
        .unwrap_or(Summary { best: f64::NAN, mean: f64::NAN, worst: f64::NAN, std: f64::NAN })
}

/// One table per block that has at least one planned function.
pub fn summarize(plan: &ExperimentPlan, outcomes: &[RunOutcome]) -> Result<Vec<BlockTable>> {
    let mut tables = vec![];
    for block in Block::ALL {
        let functions: Vec<BenchmarkId> = plan.functions.iter().copied().filter(|f| f.block() == block).collect();
        if functions.is_empty() {
            continue;
        }
        let summaries = functions
            .iter()
            .map(|&f| plan.algorithms.iter().map(|&a| cell_summary(outcomes, a, f)).collect())
            .collect();
        tables.push(BlockTable::new(block, plan.algorithms.clone(), functions, summaries, plan.rank_statistic)?);
    }
    Ok(tables)
}

/// `ranks.csv`: per-block sum and mean ranks, overall sum and mean rank, and
/// the total mean rank (sum of the block mean ranks).
pub fn render_ranks(algorithms: &[AlgorithmId], tables: &[BlockTable]) -> String {
    let mut out = String::from("algorithm");
    for t in tables {
        let _ = write!(out, ",{0}_sum_rank,{0}_mean_rank", t.block);
    }
    out.push_str(",sum_rank,mean_rank,total_mean_rank\n");
    let blocks: Vec<BlockRanks> = tables.iter().map(|t| t.ranks.clone()).collect();
    let total = total_mean_rank(&blocks);
    let functions: usize = tables.iter().map(|t| t.functions.len()).sum();
    for (a, alg) in algorithms.iter().enumerate() {
        let _ = write!(out, "{}", alg.id());
        for t in tables {
            let _ = write!(out, ",{},{}", t.ranks.sum[a], t.ranks.mean[a]);
        }
        let sum: usize = tables.iter().map(|t| t.ranks.sum[a]).sum();
        let _ = writeln!(out, ",{sum},{},{}", sum as f64 / functions as f64, total[a]);
    }
    out
}

/// Convergence file of one cell: `iteration,run,best_so_far`, run-major.
pub fn render_convergence(outcomes: &[RunOutcome]) -> String {
    let mut out = String::from("iteration,run,best_so_far\n");
    for o in outcomes {
        if let Ok(record) = &o.result {
            for (t, v) in record.trace.iter().enumerate() {
                let _ = writeln!(out, "{},{},{}", t + 1, o.run, exact(*v));
            }
        }
    }
    out
}

pub fn render_failures(outcomes: &[RunOutcome]) -> String {
    let mut out = String::from("algorithm,function,run,seed,error\n");
    for o in outcomes {
        if let Err(e) = &o.result {
            let _ = writeln!(out, "{},{},{},{},\"{}\"", o.algorithm, o.function, o.run, o.seed, e.replace('"', "\"\""));
        }
    }
    out
}

fn write(path: PathBuf, content: &str, written: &mut Vec<PathBuf>) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io_at(parent))?;
    }
    fs::write(&path, content).map_err(io_at(&path))?;
    written.push(path);
    Ok(())
}

/// Writes every artifact under `dir` and returns the paths written.
pub fn emit_all(dir: &Path, plan: &ExperimentPlan, outcomes: &[RunOutcome]) -> Result<Vec<PathBuf>> {
    let mut written = vec![];
    for (a, f) in plan.cells() {
        let cell: Vec<RunOutcome> = outcomes.iter().filter(|o| o.algorithm == a && o.function == f).cloned().collect();
        write(dir.join("convergence").join(format!("{a}_{f}.csv")), &render_convergence(&cell), &mut written)?;
    }
    let tables = summarize(plan, outcomes)?;
    for t in &tables {
        write(dir.join("summary").join(format!("{}.csv", t.block)), &t.render_csv(), &mut written)?;
        write(dir.join("summary").join(format!("{}.txt", t.block)), &t.render_text(), &mut written)?;
    }
    write(dir.join("ranks.csv"), &render_ranks(&plan.algorithms, &tables), &mut written)?;
    write(dir.join("failures.csv"), &render_failures(outcomes), &mut written)?;
    Ok(written)
}
