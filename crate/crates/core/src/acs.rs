//! Approximate minimum consistent subset on interval graphs.
//!
//! The answer is the `x` side of a minimum-bar leaf bar cover. Should that
//! set ever fail to be consistent, the smallest uncovered interval is added
//! until it is, and the number of additions is reported. If no cover is
//! found within the bar limit, the whole vertex set is returned and the
//! result is marked degraded.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cover::{optimal_leaf_bar_cover, CoverOptions};
use crate::error::{Error, Result};
use crate::graph::{exact_mcs, uncovered_vertices, ExactOptions, VertexSubset};
use crate::interval::IntervalInstance;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AcsOptions {
    pub cover: CoverOptions,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub cover_ms: f64,
    pub repair_ms: f64,
    pub exact_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcsResult {
    pub acs: VertexSubset,
    /// Bars in the cover used; 0 when degraded.
    pub bar_count: usize,
    pub repair_added: usize,
    pub degraded: bool,
    /// The cover search proved its bar count minimum.
    pub certified_cover: bool,
    /// `4α + 2`.
    pub ratio_bound: usize,
    pub exact_size: Option<usize>,
    pub achieved_ratio: Option<f64>,
    pub timings: Timings,
}

impl AcsResult {
    pub fn size(&self) -> usize {
        self.acs.len()
    }

    /// Output document with 1-based ids. Timings are included only on request
    /// so that the default output is byte-for-byte reproducible.
    pub fn document(&self, with_timings: bool) -> AcsDocument {
        AcsDocument {
            size: self.size(),
            subset: self.acs.iter().map(|v| v + 1).collect(),
            bar_count: self.bar_count,
            repair_added: self.repair_added,
            degraded: self.degraded,
            exact_size: self.exact_size,
            achieved_ratio: self.achieved_ratio,
            timings: with_timings.then_some(self.timings),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcsDocument {
    pub size: usize,
    pub subset: Vec<usize>,
    pub bar_count: usize,
    pub repair_added: usize,
    pub degraded: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub achieved_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

fn elapsed_ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn approximate_consistent_subset(inst: &IntervalInstance) -> Result<AcsResult> {
    approximate_with(inst, &AcsOptions::default())
}

pub fn approximate_with(inst: &IntervalInstance, opts: &AcsOptions) -> Result<AcsResult> {
    if !inst.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    let (mut acs, bar_count, certified, degraded) = match optimal_leaf_bar_cover(inst, &opts.cover)
    {
        Ok(sol) => (
            sol.cover.x.clone(),
            sol.cover.bar_count(),
            sol.certified_optimal,
            false,
        ),
        Err(Error::NoCover { .. }) => (inst.all_ids(), 0, false, true),
        Err(e) => return Err(e),
    };
    let cover_ms = elapsed_ms(start);

    let start = Instant::now();
    let mut repair_added = 0;
    while let Some(&v) = uncovered_vertices(inst.graph(), &acs).first() {
        acs.insert(v);
        repair_added += 1;
    }
    Ok(AcsResult {
        acs,
        bar_count,
        repair_added,
        degraded,
        certified_cover: certified,
        ratio_bound: 4 * inst.alpha() + 2,
        exact_size: None,
        achieved_ratio: None,
        timings: Timings {
            cover_ms,
            repair_ms: elapsed_ms(start),
            exact_ms: None,
        },
    })
}

/// Runs the approximation and, if asked, the exact solver for comparison.
pub fn approximation_report(
    inst: &IntervalInstance,
    run_exact: bool,
    opts: &AcsOptions,
    guard: usize,
) -> Result<AcsResult> {
    if run_exact && inst.n() > guard.min(64) {
        return Err(Error::Guard {
            size: inst.n(),
            guard: guard.min(64),
        });
    }
    let mut result = approximate_with(inst, opts)?;
    if run_exact {
        let start = Instant::now();
        let exact =
            exact_mcs(inst.graph(), ExactOptions::with_guard(guard))?.expect("no budget set");
        result.timings.exact_ms = Some(elapsed_ms(start));
        result.exact_size = Some(exact.len());
        result.achieved_ratio = Some(result.size() as f64 / exact.len() as f64);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_consistent_subset;
    use crate::interval::Interval;

    fn inst(spec: &[(u32, usize, usize)]) -> IntervalInstance {
        IntervalInstance::new(
            spec.iter()
                .map(|&(color, left, right)| Interval { color, left, right })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_interval() {
        let r = approximate_consistent_subset(&inst(&[(1, 1, 2)])).unwrap();
        assert_eq!(r.acs.to_vec(), vec![0]);
        assert_eq!(r.bar_count, 1);
        assert!(!r.degraded);
    }

    #[test]
    fn result_is_consistent() {
        let i = inst(&[(1, 1, 4), (2, 2, 6), (1, 3, 8), (2, 5, 7)]);
        let r = approximate_consistent_subset(&i).unwrap();
        assert!(is_consistent_subset(i.graph(), &r.acs).unwrap());
        assert_eq!(r.ratio_bound, 10);
    }

    #[test]
    fn degraded_when_bar_limit_too_small() {
        let i = inst(&[(1, 1, 3), (2, 2, 4)]);
        let opts = AcsOptions {
            cover: CoverOptions {
                max_bars: Some(0),
                ..CoverOptions::default()
            },
        };
        let r = approximate_with(&i, &opts).unwrap();
        assert!(r.degraded);
        assert_eq!(r.acs, i.all_ids());
        assert_eq!(r.repair_added, 0);
    }

    #[test]
    fn report_with_exact() {
        let i = inst(&[(1, 1, 3), (1, 2, 4)]);
        let r = approximation_report(&i, true, &AcsOptions::default(), 20).unwrap();
        assert_eq!(r.exact_size, Some(1));
        assert_eq!(r.achieved_ratio, Some(1.0));
        assert!(matches!(
            approximation_report(&i, true, &AcsOptions::default(), 1),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn document_is_one_based_and_omits_timings() {
        let r = approximate_consistent_subset(&inst(&[(1, 1, 3), (1, 2, 4)])).unwrap();
        let doc = r.document(false);
        assert!(doc.subset.iter().all(|&v| v >= 1));
        let json = serde_json::to_string(&doc).unwrap();
        assert!(!json.contains("timings"));
        let back: AcsDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
