//! Rank aggregation fed with the printed Best/Mean rows of the unimodal and
//! multimodal result tables. Columns: CDO, SSO, GSA, PSO, BTO, GWO, BBO.

use bbo_core::stats::{format_mean_rank, rank_functions, BlockRanks, RankStatistic, Summary};

type Row = ([f64; 7], [f64; 7], [usize; 7]);

const UNIMODAL: [Row; 7] = [
    (
        [2.29e-262, 7.58e-228, 1.01e-16, 2.60e-10, 0.0, 6.73e-60, 0.0],
        [2806.973, 146.1002, 211.3284, 546.5455, 6.237578, 385.47, 75.05441],
        [2, 3, 5, 6, 1, 4, 1],
    ),
    (
        [2.79e-135, 1.24e-129, 7.53e-08, 6.52e-06, 3.1371e-310, 5.70e-35, 0.0],
        [2.14e10, 3.78e8, 11333683.0, 6.9e9, 0.402896, 8.82e9, 1.88e9],
        [3, 4, 6, 7, 2, 5, 1],
    ),
    (
        [1.83e-226, 5.68e-111, 5.79e2, 13.89951, 0.0, 7.54e-15, 0.0],
        [85807.05, 486.0306, 1025.112, 1474.157, 307.9632, 1706.965, 205.8413],
        [2, 3, 6, 5, 1, 4, 1],
    ),
    (
        [1.52e-126, 1.14e-90, 2.4705831, 0.6105174, 2.39e-303, 1.58e-15, 0.0],
        [11.00552, 0.862714, 3.718571, 3.157701, 7.365007, 1.450779, 0.167414],
        [3, 4, 7, 6, 2, 5, 1],
    ),
    (
        [27.2393, 28.08445, 26.834915, 22.63784, 8.91678572, 28.7275415, 0.0],
        [7459448.0, 679417.8, 284805.2, 482349.6, 38370.17, 666412.5, 348228.7],
        [5, 6, 4, 3, 2, 7, 1],
    ),
    (
        [7.5, 4.6204259, 297.666, 2.72e-09, 0.46577979, 0.75328863, 0.0],
        [3585.788, 111.1483, 495.7094, 567.6743, 408.026, 320.0206, 97.522],
        [6, 5, 7, 2, 3, 4, 1],
    ),
    (
        [3.19e-05, 9.24e-06, 0.0725943, 0.043291, 6.06e-05, 0.00149316, 9.15e-06],
        [4.432104, 0.267079, 6.820644, 34.42917, 0.463912, 0.392273, 0.111119],
        [3, 2, 7, 6, 4, 5, 1],
    ),
];

const MULTIMODAL: [Row; 6] = [
    (
        [-3720.6698, -5846.460, -3415.703, -5303.718, -2056.1316, -5315.5958, -7650.9312],
        [-3655.94, -5830.63, -3412.61, -4466.88, -2029.17, -3702.07, -7152.78],
        [5, 2, 6, 4, 7, 3, 1],
    ),
    (
        [0.0, 0.0, 42.78318, 55.87139, 0.0, 0.0, 0.0],
        [181.6997, 3.454446, 68.88327, 177.2212, 0.161237, 15.45727, 1.039771],
        [1, 1, 2, 3, 1, 1, 1],
    ),
    (
        [4.44e-15, 8.88e-16, 7.59e-09, 3.04e-05, 4.44e-16, 1.87e-14, 4.44e-16],
        [2.785804, 0.205432, 0.630983, 2.884515, 3.454814, 0.421708, 0.064045],
        [3, 2, 5, 6, 1, 4, 1],
    ),
    (
        [0.0, 0.0, 6.3328787, 3.13e-10, 0.0, 0.00815731, 0.0],
        [36.014, 1.827366, 14.35131, 24.33951, 10.58792, 3.450238, 0.991813],
        [1, 1, 4, 2, 1, 3, 1],
    ),
    (
        [1.10610243, 0.54128459, 0.7488053, 4.09e-10, 1.42830782, 0.0508685, 0.72052502],
        [13345615.0, 1894428.0, 787044.3, 1282232.0, 1.02e8, 1993671.0, 636867.4],
        [6, 3, 5, 1, 7, 2, 4],
    ),
    (
        [0.29475594, 2.47406254, 0.0109873, 9.80e-13, 0.37245674, 0.60800782, 1.35e-32],
        [2.13e7, 3983608.0, 1637630.0, 1976444.0, 1791279.0, 4737926.0, 1242062.0],
        [4, 7, 3, 2, 5, 6, 1],
    ),
];

fn summaries(rows: &[Row]) -> Vec<Vec<Summary>> {
    rows.iter()
        .map(|(best, mean, _)| (0..7).map(|a| Summary { best: best[a], mean: mean[a], worst: f64::NAN, std: f64::NAN }).collect())
        .collect()
}

#[test]
fn unimodal_rank_rows_and_footer() {
    let rows = summaries(&UNIMODAL);
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(rank_functions(row, RankStatistic::Best), UNIMODAL[k].2.to_vec(), "F{}", k + 1);
    }
    let block = BlockRanks::from_summaries(&rows, RankStatistic::Best).unwrap();
    assert_eq!(block.sum, vec![24, 27, 42, 35, 15, 34, 7]);
    let shown: Vec<String> = block.mean.iter().map(|&m| format_mean_rank(m)).collect();
    assert_eq!(shown, ["3.42", "3.85", "6", "5", "2.14", "4.85", "1"]);
}

#[test]
fn multimodal_rank_rows_and_footer() {
    let rows = summaries(&MULTIMODAL);
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(rank_functions(row, RankStatistic::Best), MULTIMODAL[k].2.to_vec(), "F{}", k + 8);
    }
    let block = BlockRanks::from_summaries(&rows, RankStatistic::Best).unwrap();
    assert_eq!(block.sum, vec![20, 16, 25, 18, 22, 19, 9]);
    let shown: Vec<String> = block.mean.iter().map(|&m| format_mean_rank(m)).collect();
    assert_eq!(shown, ["3.33", "2.66", "4.16", "3", "3.66", "3.16", "1.5"]);
}

#[test]
fn mean_tie_break_changes_shared_first_places() {
    let rows = summaries(&UNIMODAL);
    let f1 = rank_functions(&rows[0], RankStatistic::BestThenMean);
    assert_eq!(f1[4], 1);
    assert_eq!(f1[6], 2);
}
