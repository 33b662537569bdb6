//! Colored interval layouts on the endpoint line.
//!
//! The 2n endpoints are ranked `1..=2n` left to right; `0` and `2n+1` are
//! sentinel points with no owner. A [`Bar`] `(i..j)` is the open range of
//! points strictly between `i` and `j`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, VertexId, VertexSubset};

/// An interval whose endpoints are point labels in `1..=2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub color: Color,
    pub left: usize,
    pub right: usize,
}

/// An interval with real-valued endpoints, before rank compression.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawInterval {
    pub color: Color,
    pub left: f64,
    pub right: f64,
}

impl RawInterval {
    pub fn new(color: Color, left: f64, right: f64) -> Self {
        RawInterval { color, left, right }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalInstance {
    intervals: Vec<Interval>,
    /// `owner[p]` is the interval with an endpoint at label `p`.
    owner: Vec<Option<VertexId>>,
    graph: ColoredGraph,
}

impl IntervalInstance {
    /// Builds an instance from already-ranked intervals. Endpoint labels
    /// must be exactly `1..=2n`, each used once, with `left < right`.
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        let n = intervals.len();
        if n == 0 {
            return Err(Error::input(
                "an interval instance needs at least one interval",
            ));
        }
        let mut owner = vec![None; 2 * n + 2];
        for (id, iv) in intervals.iter().enumerate() {
            if iv.left >= iv.right {
                return Err(Error::input(format!(
                    "interval {id}: left endpoint must precede right"
                )));
            }
            for p in [iv.left, iv.right] {
                if p == 0 || p > 2 * n {
                    return Err(Error::input(format!(
                        "interval {id}: endpoint {p} outside 1..={}",
                        2 * n
                    )));
                }
                if owner[p].replace(id).is_some() {
                    return Err(Error::input(format!("endpoint label {p} is used twice")));
                }
            }
        }

        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (intervals[a], intervals[b]);
                if x.left < y.right && y.left < x.right {
                    edges.push((a, b));
                }
            }
        }
        let graph = ColoredGraph::new(intervals.iter().map(|iv| iv.color).collect(), &edges)?;
        Ok(IntervalInstance {
            intervals,
            owner,
            graph,
        })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn alpha(&self) -> usize {
        self.graph.alpha()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, id: VertexId) -> Interval {
        self.intervals[id]
    }

    pub fn color(&self, id: VertexId) -> Color {
        self.intervals[id].color
    }

    /// `I[p]`: the interval owning endpoint `p`; `None` for the sentinels.
    pub fn owner(&self, p: usize) -> Option<VertexId> {
        self.owner.get(p).copied().flatten()
    }

    /// The right sentinel `2n + 1`.
    pub fn last_point(&self) -> usize {
        2 * self.n() + 1
    }

    /// The overlap graph (intervals adjacent iff they intersect).
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn all_ids(&self) -> VertexSubset {
        (0..self.n()).collect()
    }

    pub(crate) fn check_bar(&self, bar: Bar) -> Result<()> {
        if bar.right > self.last_point() {
            return Err(Error::input(format!(
                "bar {bar} extends past the sentinel {}",
                self.last_point()
            )));
        }
        Ok(())
    }

    /// Per-interval flag: has an endpoint strictly inside `bar`.
    pub(crate) fn inside_flags(&self, bar: Bar) -> Vec<bool> {
        let mut flags = vec![false; self.n()];
        for p in bar.interior() {
            if let Some(id) = self.owner(p) {
                flags[id] = true;
            }
        }
        flags
    }
}

/// Rank-compresses real endpoints onto `1..=2n`, preserving their order.
pub fn normalize(raw: &[RawInterval]) -> Result<IntervalInstance> {
    let mut points: Vec<(f64, VertexId, bool)> = Vec::with_capacity(2 * raw.len());
    for (id, iv) in raw.iter().enumerate() {
        if !iv.left.is_finite() || !iv.right.is_finite() {
            return Err(Error::input(format!(
                "interval {id}: endpoints must be finite"
            )));
        }
        if iv.left >= iv.right {
            return Err(Error::input(format!(
                "interval {id}: left endpoint must precede right"
            )));
        }
        points.push((iv.left, id, false));
        points.push((iv.right, id, true));
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    if let Some(w) = points.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::input(format!("endpoint value {} is shared", w[0].0)));
    }
    let mut out: Vec<Interval> = raw
        .iter()
        .map(|iv| Interval {
            color: iv.color,
            left: 0,
            right: 0,
        })
        .collect();
    for (rank, &(_, id, is_right)) in points.iter().enumerate() {
        if is_right {
            out[id].right = rank + 1;
        } else {
            out[id].left = rank + 1;
        }
    }
    IntervalInstance::new(out)
}

/// Equivalent to [`IntervalInstance::graph`], returned by value.
pub fn overlap_graph(inst: &IntervalInstance) -> ColoredGraph {
    inst.graph().clone()
}

/// Open range `(left..right)` of point labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bar {
    pub left: usize,
    pub right: usize,
}

impl Bar {
    pub fn new(left: usize, right: usize) -> Result<Self> {
        if left >= right {
            return Err(Error::input(format!(
                "bar ({left}..{right}) needs left < right"
            )));
        }
        Ok(Bar { left, right })
    }

    /// Points strictly between the two ends.
    pub fn interior(self) -> std::ops::Range<usize> {
        self.left + 1..self.right
    }

    pub fn contains_point(self, p: usize) -> bool {
        self.left < p && p < self.right
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}..{})", self.left, self.right)
    }
}

/// `I_s` (intervals with an endpoint inside the bar) and its complement `O_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarSets {
    pub inside: VertexSubset,
    pub outside: VertexSubset,
}

pub fn bar_sets(inst: &IntervalInstance, bar: Bar) -> Result<BarSets> {
    inst.check_bar(bar)?;
    let flags = inst.inside_flags(bar);
    let (inside, outside): (Vec<_>, Vec<_>) = (0..inst.n()).partition(|&id| flags[id]);
    Ok(BarSets {
        inside: inside.into(),
        outside: outside.into(),
    })
}

/// A bar is a leaf bar when `O_s` covers `I_s` in the overlap-graph metric.
/// An empty `I_s` is trivially covered; a nonempty `I_s` with empty `O_s`
/// is not.
pub fn is_leaf_bar(inst: &IntervalInstance, bar: Bar) -> Result<bool> {
    inst.check_bar(bar)?;
    Ok(leaf_test(inst, &inst.inside_flags(bar)))
}

pub(crate) fn leaf_test(inst: &IntervalInstance, inside: &[bool]) -> bool {
    let outside: Vec<VertexId> = (0..inst.n()).filter(|&id| !inside[id]).collect();
    let g = inst.graph();
    (0..inst.n())
        .filter(|&id| inside[id])
        .all(|id| g.is_covered_by(id, outside.iter().copied()))
}

/// Boolean table over point pairs: `get(i, j)` is true iff `i < j` and
/// `(i..j)` is a leaf bar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafBarMatrix {
    size: usize,
    cells: Vec<bool>,
}

impl LeafBarMatrix {
    /// Side length `2n + 2`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        i < self.size && j < self.size && self.cells[i * self.size + j]
    }

    pub fn leaf_bars(&self) -> impl Iterator<Item = Bar> + '_ {
        (0..self.size).flat_map(move |i| {
            (i + 1..self.size)
                .filter(move |&j| self.get(i, j))
                .map(move |j| Bar { left: i, right: j })
        })
    }
}

pub fn leaf_bar_matrix(inst: &IntervalInstance) -> LeafBarMatrix {
    let size = inst.last_point() + 1;
    let rows: Vec<Vec<bool>> = (0..size)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![false; size];
            let mut inside = vec![false; inst.n()];
            // grow the bar one point at a time from the left end
            for (j, cell) in row.iter_mut().enumerate().skip(i + 1) {
                if j > i + 1 {
                    if let Some(id) = inst.owner(j - 1) {
                        inside[id] = true;
                    }
                }
                *cell = leaf_test(inst, &inside);
            }
            row
        })
        .collect();
    LeafBarMatrix {
        size,
        cells: rows.concat(),
    }
}
