//! Scaling harness: time the matching pipeline on random instances.
//!
//! Each cell generates a graph, times the three phases separately, and
//! verifies the result outside the clock. Rows come back in grid order no
//! matter how many worker threads ran them, so runs differ only in the
//! timing columns.

use crate::cuts::{build_cactus, validate_cactus};
use crate::gen;
use crate::spread::{assemble, decompose, is_well_spread};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub seed: u64,
    pub cactus_ms: f64,
    pub decompose_ms: f64,
    pub assemble_ms: f64,
    pub total_ms: f64,
    pub verified: bool,
}

pub const CSV_HEADER: &str = "n,seed,cactus_ms,decompose_ms,assemble_ms,total_ms,verified";

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn measure(n: usize, seed: u64) -> BenchRecord {
    let g = gen::random(n, seed);

    let t = Instant::now();
    let model = build_cactus(&g).expect("generator output is 3-edge-connected");
    let cactus_ms = ms(t);

    let t = Instant::now();
    let d = decompose(&g, &model).expect("model was just built for this graph");
    let decompose_ms = ms(t);

    let t = Instant::now();
    let m = assemble(&g, &d).expect("a well-spread matching always exists");
    let assemble_ms = ms(t);

    // all checks run off the clock: the full model validation, the tree
    // size bounds, and the matching itself
    let e = model.edge_count();
    let verified = validate_cactus(&model, &g).pass
        && e >= n
        && e <= 2 * n - 3
        && is_well_spread(&g, &model, &m);

    BenchRecord {
        n,
        seed,
        cactus_ms,
        decompose_ms,
        assemble_ms,
        total_ms: cactus_ms + decompose_ms + assemble_ms,
        verified,
    }
}

/// One grid cell. With `median3` the cell runs three times and reports
/// the run with the median total, phases included.
pub fn run_cell(n: usize, seed: u64, median3: bool) -> BenchRecord {
    if !median3 {
        return measure(n, seed);
    }
    let mut runs = [measure(n, seed), measure(n, seed), measure(n, seed)];
    runs.sort_by(|a, b| a.total_ms.total_cmp(&b.total_ms));
    let [_, mid, _] = runs;
    mid
}

/// Runs sizes × seeds (row-major) on `jobs` worker threads.
pub fn run_grid(sizes: &[usize], seeds: &[u64], median3: bool, jobs: usize) -> Vec<BenchRecord> {
    let cells: Vec<(usize, u64)> =
        sizes.iter().flat_map(|&n| seeds.iter().map(move |&s| (n, s))).collect();
    let results = Mutex::new(vec![None; cells.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(cells.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, seed)) = cells.get(i) else { break };
                let rec = run_cell(n, seed, median3);
                results.lock().unwrap()[i] = Some(rec);
            });
        }
    });
    results.into_inner().unwrap().into_iter().map(|r| r.expect("every cell ran")).collect()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{:.3},{:.3},{:.3},{:.3},{}\n",
            r.n, r.seed, r.cactus_ms, r.decompose_ms, r.assemble_ms, r.total_ms, r.verified
        ));
    }
    out
}

/// Least-squares slope of log(total_ms) against log(n): the empirical
/// scaling exponent. Needs at least two distinct sizes.
pub fn log_log_slope(records: &[BenchRecord]) -> f64 {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.n as f64).ln(), r.total_ms.max(1e-6).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    num / den
}
