//! Run statistics and the rank aggregation used in the result tables.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

fn nonempty(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        Err(input("statistic of an empty sequence"))
    } else {
        Ok(())
    }
}

pub fn mean(values: &[f64]) -> Result<f64> {
    nonempty(values)?;
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Bessel-corrected sample standard deviation.
pub fn stddev(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return Err(input("standard deviation needs at least two values"));
    }
    let m = mean(values)?;
    let ss: f64 = values.iter().map(|v| (v - m).powi(2)).sum();
    Ok((ss / (values.len() - 1) as f64).sqrt())
}

pub fn best(values: &[f64]) -> Result<f64> {
    nonempty(values)?;
    Ok(values.iter().copied().fold(f64::INFINITY, f64::min))
}

pub fn worst(values: &[f64]) -> Result<f64> {
    nonempty(values)?;
    Ok(values.iter().copied().fold(f64::NEG_INFINITY, f64::max))
}

/// Best / Mean / Worst / Std of the final values of repeated runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub best: f64,
    pub mean: f64,
    pub worst: f64,
    /// NaN when there is a single run.
    pub std: f64,
}

impl Summary {
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Ok(Self {
            best: best(values)?,
            mean: mean(values)?,
            worst: worst(values)?,
            std: if values.len() < 2 { f64::NAN } else { stddev(values)? },
        })
    }
}

/// Statistic the per-function ranks are computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankStatistic {
    #[default]
    Best,
    /// Best, with Mean breaking exact ties.
    BestThenMean,
    Mean,
}

impl RankStatistic {
    pub const ALL: [RankStatistic; 3] = [RankStatistic::Best, RankStatistic::BestThenMean, RankStatistic::Mean];

    pub fn id(self) -> &'static str {
        match self {
            RankStatistic::Best => "best",
            RankStatistic::BestThenMean => "best-then-mean",
            RankStatistic::Mean => "mean",
        }
    }

    fn key(self, s: &Summary) -> (f64, f64) {
        match self {
            RankStatistic::Best => (s.best, 0.0),
            RankStatistic::BestThenMean => (s.best, s.mean),
            RankStatistic::Mean => (s.mean, 0.0),
        }
    }
}

impl fmt::Display for RankStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RankStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::UnknownId { kind: "rank statistic", id: s.to_string() })
    }
}

// NaN sorts after every number.
fn cmp_value(a: f64, b: f64) -> Ordering {
    match (a.is_nan(), b.is_nan()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => a.partial_cmp(&b).unwrap(),
    }
}

/// Dense ranks, smallest key first: tied keys share a rank and the next
/// distinct key gets the next integer.
pub fn dense_ranks<K, F>(keys: &[K], cmp: F) -> Vec<usize>
where
    F: Fn(&K, &K) -> Ordering,
{
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| cmp(&keys[a], &keys[b]));
    let mut ranks = vec![0; keys.len()];
    let mut rank = 0;
    for (k, &i) in order.iter().enumerate() {
        if k == 0 || cmp(&keys[order[k - 1]], &keys[i]) != Ordering::Equal {
            rank += 1;
        }
        ranks[i] = rank;
    }
    ranks
}

/// Ranks of the algorithms on one function, one summary per algorithm.
pub fn rank_functions(rows: &[Summary], statistic: RankStatistic) -> Vec<usize> {
    let keys: Vec<(f64, f64)> = rows.iter().map(|s| statistic.key(s)).collect();
    dense_ranks(&keys, |a, b| cmp_value(a.0, b.0).then(cmp_value(a.1, b.1)))
}

/// Rank totals of one function block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockRanks {
    /// `ranks[f][a]`: rank of algorithm `a` on function `f`.
    pub ranks: Vec<Vec<usize>>,
    pub sum: Vec<usize>,
    pub mean: Vec<f64>,
}

impl BlockRanks {
    /// Aggregates per-function rank rows, which must all have the same length.
    pub fn from_ranks(ranks: Vec<Vec<usize>>) -> Result<Self> {
        let width = ranks.first().map(Vec::len).ok_or_else(|| input("no functions to aggregate"))?;
        if ranks.iter().any(|r| r.len() != width) {
            return Err(input("rank rows differ in length"));
        }
        let sum: Vec<usize> = (0..width).map(|a| ranks.iter().map(|r| r[a]).sum()).collect();
        let mean = sum.iter().map(|&s| s as f64 / ranks.len() as f64).collect();
        Ok(Self { ranks, sum, mean })
    }

    /// Ranks every function's summaries and aggregates them. `rows[f][a]`
    /// is the summary of algorithm `a` on function `f`.
    pub fn from_summaries(rows: &[Vec<Summary>], statistic: RankStatistic) -> Result<Self> {
        Self::from_ranks(rows.iter().map(|r| rank_functions(r, statistic)).collect())
    }
}

/// Sum over blocks of each algorithm's mean rank.
pub fn total_mean_rank(blocks: &[BlockRanks]) -> Vec<f64> {
    let width = blocks.first().map_or(0, |b| b.mean.len());
    (0..width).map(|a| blocks.iter().map(|b| b.mean[a]).sum()).collect()
}

/// Mean rank truncated to two decimals, the way the result tables print it.
pub fn format_mean_rank(value: f64) -> String {
    let t = (value * 100.0 + 1e-9).floor() / 100.0;
    let s = format!("{t:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
