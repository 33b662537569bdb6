//! Approximation-ratio benchmark over seeded random interval instances.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::acs::{approximation_report, AcsOptions};
use crate::error::{Error, Result};
use crate::gen::{random_interval_instance, GenConfig};
use crate::graph::DEFAULT_GUARD;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub n: usize,
    pub alpha: usize,
    pub trials: usize,
    /// Trial `t` uses seed `seed + t`.
    pub seed: u64,
    /// Run the exact solver on instances with at most this many intervals.
    pub exact_max: usize,
    pub guard: usize,
}

impl BenchConfig {
    pub fn new(n: usize, alpha: usize, trials: usize, seed: u64) -> Self {
        BenchConfig {
            n,
            alpha,
            trials,
            seed,
            exact_max: 0,
            guard: DEFAULT_GUARD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactStatus {
    NotRequested,
    /// Requested but above the brute-force guard.
    Skipped,
    Size(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub alpha: usize,
    pub acs_size: usize,
    pub bar_count: usize,
    pub repair_added: usize,
    pub degraded: bool,
    pub exact: ExactStatus,
}

impl BenchRow {
    pub fn ratio(&self) -> Option<f64> {
        match self.exact {
            ExactStatus::Size(k) => Some(self.acs_size as f64 / k as f64),
            _ => None,
        }
    }
}

pub fn run_trial(cfg: &BenchConfig, seed: u64) -> Result<BenchRow> {
    let inst = random_interval_instance(&GenConfig::new(cfg.n, cfg.alpha, seed))?;
    let requested = cfg.n <= cfg.exact_max;
    let run_exact = requested && cfg.n <= cfg.guard.min(64);
    let report = approximation_report(&inst, run_exact, &AcsOptions::default(), cfg.guard)?;
    Ok(BenchRow {
        seed,
        n: cfg.n,
        alpha: cfg.alpha,
        acs_size: report.size(),
        bar_count: report.bar_count,
        repair_added: report.repair_added,
        degraded: report.degraded,
        exact: match (requested, report.exact_size) {
            (_, Some(k)) => ExactStatus::Size(k),
            (true, None) => ExactStatus::Skipped,
            (false, None) => ExactStatus::NotRequested,
        },
    })
}

/// Runs all trials in parallel; rows come back in seed order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    if cfg.trials == 0 {
        return Err(Error::input("trials must be at least 1"));
    }
    (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(cfg, cfg.seed.wrapping_add(t)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub max_ratio: f64,
    pub mean_ratio: f64,
    pub rated: usize,
}

/// Ratio statistics over non-degraded rows with an exact size.
pub fn summarize(rows: &[BenchRow]) -> Option<BenchSummary> {
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| !r.degraded)
        .filter_map(BenchRow::ratio)
        .collect();
    if ratios.is_empty() {
        return None;
    }
    Some(BenchSummary {
        max_ratio: ratios.iter().copied().fold(f64::MIN, f64::max),
        mean_ratio: ratios.iter().sum::<f64>() / ratios.len() as f64,
        rated: ratios.len(),
    })
}

pub const CSV_HEADER: [&str; 9] = [
    "seed",
    "n",
    "alpha",
    "acs_size",
    "bar_count",
    "repair_added",
    "degraded",
    "exact_size",
    "ratio",
];

/// Writes rows as CSV followed by `max` and `mean` summary rows when any
/// row has a ratio.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::input(format!("csv output failed: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let (exact, ratio) = match r.exact {
            ExactStatus::Size(k) => (
                k.to_string(),
                format!("{:.6}", r.acs_size as f64 / k as f64),
            ),
            ExactStatus::Skipped => ("skip".into(), "skip".into()),
            ExactStatus::NotRequested => (String::new(), String::new()),
        };
        w.write_record([
            r.seed.to_string(),
            r.n.to_string(),
            r.alpha.to_string(),
            r.acs_size.to_string(),
            r.bar_count.to_string(),
            r.repair_added.to_string(),
            r.degraded.to_string(),
            exact,
            ratio,
        ])
        .map_err(io)?;
    }
    if let Some(s) = summarize(rows) {
        for (label, value) in [("max", s.max_ratio), ("mean", s.mean_ratio)] {
            let mut rec = vec![String::new(); CSV_HEADER.len()];
            rec[0] = label.into();
            rec[8] = format!("{value:.6}");
            w.write_record(&rec).map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| Error::input(format!("csv output failed: {e}")))?;
    Ok(())
}
