//! Leaf bar covers.
//!
//! A cover is a left-to-right chain of bars `(k0..k1), (k1..k2), ...` with a
//! set `Z` attached to each bar. Writing `x` for the union of the `Z` sets
//! and `y` for the union of the `I_s` sets, a cover is valid when
//!
//! 1. every interval of `y` is covered by `x`,
//! 2. `x ∪ y` is every interval,
//! 3. `x ∩ y` is empty.
//!
//! Chains produced by [`chain_cover`] attach the useful cover of each bar
//! and additionally keep every interval that has no endpoint inside any bar
//! (it sits on the chain's boundary points). Such an interval is attached to
//! the bar ending at its left endpoint. Without this, an interval that only
//! covers itself (for instance the sole interval of its color) could never
//! enter `x`. Chains must start at point 0 or 1 and end at `2n` or `2n+1`,
//! so every real endpoint is either inside a bar or a boundary point.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    has_consistent_proper_subset, uncovered_vertices, ExactOptions, VertexId, VertexSubset,
};
use crate::interval::{leaf_bar_matrix, Bar, IntervalInstance};
use crate::useful_cover::select_members;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafBarCover {
    pub bars: Vec<Bar>,
    /// `Z` set per bar, parallel to `bars`.
    pub zs: Vec<VertexSubset>,
    pub x: VertexSubset,
    pub y: VertexSubset,
}

impl LeafBarCover {
    pub fn new(inst: &IntervalInstance, bars: Vec<Bar>, zs: Vec<VertexSubset>) -> Result<Self> {
        if bars.len() != zs.len() {
            return Err(Error::input("one Z set is needed per bar"));
        }
        let mut y = VertexSubset::new();
        for &bar in &bars {
            inst.check_bar(bar)?;
            for p in bar.interior() {
                if let Some(id) = inst.owner(p) {
                    y.insert(id);
                }
            }
        }
        let mut x = VertexSubset::new();
        for z in &zs {
            for id in z.iter() {
                if id >= inst.n() {
                    return Err(Error::input(format!("interval {id} out of range")));
                }
                x.insert(id);
            }
        }
        Ok(LeafBarCover { bars, zs, x, y })
    }

    pub fn bar_count(&self) -> usize {
        self.bars.len()
    }

    /// Chain boundary points `k0 < k1 < ... < km`, when the bars are contiguous.
    pub fn boundaries(&self) -> Option<Vec<usize>> {
        let first = self.bars.first()?;
        let mut points = vec![first.left];
        for w in self.bars.windows(2) {
            if w[0].right != w[1].left {
                return None;
            }
        }
        points.extend(self.bars.iter().map(|b| b.right));
        Some(points)
    }
}

/// Per-condition outcome of [`is_leaf_bar_cover`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverVerdict {
    /// Condition 1: `y` is covered by `x`.
    pub covered: bool,
    /// Condition 2: `x ∪ y` is every interval.
    pub complete: bool,
    /// Condition 3: `x` and `y` are disjoint.
    pub disjoint: bool,
    pub uncovered: Vec<VertexId>,
    pub missing: Vec<VertexId>,
    pub overlapping: Vec<VertexId>,
    /// Informational: bars that are not leaf bars.
    pub non_leaf_bars: Vec<Bar>,
    /// Informational: each bar starts where the previous one ends.
    pub contiguous: bool,
}

impl CoverVerdict {
    pub fn is_valid(&self) -> bool {
        self.covered && self.complete && self.disjoint
    }

    /// Numbers (1, 2, 3) of the failed conditions.
    pub fn failed_conditions(&self) -> Vec<u8> {
        [(1, self.covered), (2, self.complete), (3, self.disjoint)]
            .into_iter()
            .filter(|&(_, ok)| !ok)
            .map(|(c, _)| c)
            .collect()
    }
}

pub fn is_leaf_bar_cover(inst: &IntervalInstance, cover: &LeafBarCover) -> Result<CoverVerdict> {
    let g = inst.graph();
    let x: Vec<VertexId> = cover.x.to_vec();
    let uncovered: Vec<VertexId> = cover
        .y
        .iter()
        .filter(|&v| !cover.x.contains(v) && !g.is_covered_by(v, x.iter().copied()))
        .collect();
    let missing: Vec<VertexId> = (0..inst.n())
        .filter(|&v| !cover.x.contains(v) && !cover.y.contains(v))
        .collect();
    let overlapping: Vec<VertexId> = cover.x.iter().filter(|&v| cover.y.contains(v)).collect();
    let mut non_leaf_bars = Vec::new();
    for &bar in &cover.bars {
        if !crate::interval::is_leaf_bar(inst, bar)? {
            non_leaf_bars.push(bar);
        }
    }
    Ok(CoverVerdict {
        covered: uncovered.is_empty(),
        complete: missing.is_empty(),
        disjoint: overlapping.is_empty(),
        uncovered,
        missing,
        overlapping,
        non_leaf_bars,
        contiguous: cover.boundaries().is_some(),
    })
}

/// Builds the cover over the boundary points of a consistent subset `S`.
///
/// Bars run between consecutive endpoints of `S`, plus `(0..i1)` when the
/// first endpoint is past 1 and `(i2d..2n+1)` when the last is before `2n`.
/// Each bar's `Z` is the set of `S` members covering some interval inside
/// it; members of `S` that cover nothing else are attached to the bar ending
/// at their left endpoint.
///
/// `S` must be consistent with no consistent proper subset; checking the
/// latter is exhaustive and bounded by `opts.guard`.
pub fn cover_from_consistent_subset(
    inst: &IntervalInstance,
    subset: &VertexSubset,
    opts: ExactOptions,
) -> Result<LeafBarCover> {
    let g = inst.graph();
    if subset.is_empty() {
        return Err(Error::input("a consistent subset is never empty"));
    }
    if subset.iter().any(|v| v >= inst.n()) {
        return Err(Error::input("subset refers to an unknown interval"));
    }
    if !uncovered_vertices(g, subset).is_empty() {
        return Err(Error::precondition("the subset is not consistent"));
    }
    if has_consistent_proper_subset(g, subset, opts)? {
        return Err(Error::precondition("a proper subset is already consistent"));
    }

    let mut points: Vec<usize> = subset
        .iter()
        .flat_map(|v| [inst.interval(v).left, inst.interval(v).right])
        .collect();
    points.sort_unstable();
    let two_n = 2 * inst.n();
    if points[0] > 1 {
        points.insert(0, 0);
    }
    if *points.last().unwrap() < two_n {
        points.push(two_n + 1);
    }
    let bars: Vec<Bar> = points
        .windows(2)
        .map(|w| Bar {
            left: w[0],
            right: w[1],
        })
        .collect();

    let members = subset.to_vec();
    let mut zs: Vec<VertexSubset> = bars
        .iter()
        .map(|&bar| {
            let mut z = VertexSubset::new();
            for p in bar.interior() {
                let Some(v) = inst.owner(p) else { continue };
                let best = members.iter().map(|&u| g.raw_distance(v, u)).min().unwrap();
                z.extend(
                    members
                        .iter()
                        .copied()
                        .filter(|&u| g.raw_distance(v, u) == best && g.color(u) == g.color(v)),
                );
            }
            z
        })
        .collect();
    attach_leftovers(inst, &points, subset.iter(), &mut zs);
    LeafBarCover::new(inst, bars, zs)
}

fn attach_leftovers(
    inst: &IntervalInstance,
    boundaries: &[usize],
    keep: impl Iterator<Item = VertexId>,
    zs: &mut [VertexSubset],
) {
    let assigned: HashSet<VertexId> = zs.iter().flat_map(|z| z.iter()).collect();
    for v in keep.filter(|v| !assigned.contains(v)) {
        let left = inst.interval(v).left;
        let pos = boundaries.partition_point(|&b| b < left);
        let idx = pos.saturating_sub(1).min(zs.len() - 1);
        zs[idx].insert(v);
    }
}

/// Builds the cover for a chain given by its boundary points, attaching
/// useful covers and kept intervals as described in the module docs.
/// Every bar must be a leaf bar.
pub fn chain_cover(inst: &IntervalInstance, boundaries: &[usize]) -> Result<LeafBarCover> {
    if boundaries.len() < 2 {
        return Err(Error::input("a chain needs at least two boundary points"));
    }
    let mut bars = Vec::with_capacity(boundaries.len() - 1);
    for w in boundaries.windows(2) {
        let bar = Bar::new(w[0], w[1])?;
        inst.check_bar(bar)?;
        bars.push(bar);
    }
    let mut zs = Vec::with_capacity(bars.len());
    let mut in_y = vec![false; inst.n()];
    for &bar in &bars {
        let inside = inst.inside_flags(bar);
        if !crate::interval::leaf_test(inst, &inside) {
            return Err(Error::precondition(format!("bar {bar} is not a leaf bar")));
        }
        for (id, &f) in inside.iter().enumerate() {
            in_y[id] |= f;
        }
        zs.push(
            select_members(inst, bar, &inside)
                .into_iter()
                .collect::<VertexSubset>(),
        );
    }
    let kept = (0..inst.n()).filter(|&v| !in_y[v]);
    attach_leftovers(inst, boundaries, kept, &mut zs);
    LeafBarCover::new(inst, bars, zs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverOptions {
    /// Reject chains longer than this.
    pub max_bars: Option<usize>,
    /// Cap on distinct search states for the exhaustive chain search.
    pub state_budget: usize,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions {
            max_bars: None,
            state_budget: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub cover: LeafBarCover,
    pub boundaries: Vec<usize>,
    /// The exhaustive search finished, so the bar count is minimum.
    pub certified_optimal: bool,
    /// Bar count of the sweep's chain, if it produced a valid one.
    pub sweep_bars: Option<usize>,
    pub states_explored: usize,
}

/// Leaf-bar information precomputed for every leaf bar of an instance.
struct BarTable {
    size: usize,
    two_n: usize,
    /// Indexed by `k * size + l`; `None` when `(k..l)` is not a leaf bar.
    entries: Vec<Option<BarEntry>>,
}

struct BarEntry {
    inside: FixedBitSet,
    z: FixedBitSet,
}

impl BarTable {
    fn new(inst: &IntervalInstance) -> Self {
        let matrix = leaf_bar_matrix(inst);
        let size = matrix.size();
        let n = inst.n();
        let mut entries = Vec::with_capacity(size * size);
        for k in 0..size {
            for l in 0..size {
                if !matrix.get(k, l) {
                    entries.push(None);
                    continue;
                }
                let bar = Bar { left: k, right: l };
                let flags = inst.inside_flags(bar);
                let mut inside = FixedBitSet::with_capacity(n);
                let mut z = FixedBitSet::with_capacity(n);
                for (id, &f) in flags.iter().enumerate() {
                    inside.set(id, f);
                }
                if inside.count_ones(..) > 0 {
                    for id in select_members(inst, bar, &flags) {
                        z.insert(id);
                    }
                }
                entries.push(Some(BarEntry { inside, z }));
            }
        }
        BarTable {
            size,
            two_n: 2 * n,
            entries,
        }
    }

    fn get(&self, k: usize, l: usize) -> Option<&BarEntry> {
        self.entries[k * self.size + l].as_ref()
    }
}

#[derive(Clone)]
struct Partial {
    chain: Vec<usize>,
    y: FixedBitSet,
    z: FixedBitSet,
}

impl Partial {
    fn start(at: usize, n: usize) -> Self {
        Partial {
            chain: vec![at],
            y: FixedBitSet::with_capacity(n),
            z: FixedBitSet::with_capacity(n),
        }
    }

    fn at(&self) -> usize {
        *self.chain.last().unwrap()
    }

    fn bars(&self) -> usize {
        self.chain.len() - 1
    }

    /// Appends `(at..l)`; `None` if a selected interval would land inside a bar.
    fn extend(&self, l: usize, entry: &BarEntry) -> Option<Partial> {
        let mut y = self.y.clone();
        y.union_with(&entry.inside);
        let mut z = self.z.clone();
        z.union_with(&entry.z);
        if !z.is_disjoint(&y) {
            return None;
        }
        let mut chain = self.chain.clone();
        chain.push(l);
        Some(Partial { chain, y, z })
    }
}

/// `y` is covered by the intervals outside `y`.
fn kept_covers(inst: &IntervalInstance, y: &FixedBitSet) -> bool {
    let g = inst.graph();
    let kept: Vec<VertexId> = (0..inst.n()).filter(|&v| !y.contains(v)).collect();
    y.ones().all(|v| g.is_covered_by(v, kept.iter().copied()))
}

fn is_terminal(table: &BarTable, p: &Partial) -> bool {
    p.bars() >= 1 && p.at() >= table.two_n
}

/// Left-to-right sweep keeping, for each point, the best chain found so far
/// (fewest bars, then lexicographically smallest). Each extension must keep
/// selected intervals outside every bar and leave the accumulated `y`
/// covered by the intervals not in `y`.
fn sweep(inst: &IntervalInstance, table: &BarTable) -> Option<Partial> {
    let n = inst.n();
    let mut best: Vec<Option<Partial>> = vec![None; table.size];
    best[0] = Some(Partial::start(0, n));
    best[1] = Some(Partial::start(1, n));
    for l in 2..table.size {
        for k in 0..l {
            let (Some(from), Some(entry)) = (best[k].as_ref(), table.get(k, l)) else {
                continue;
            };
            let Some(cand) = from.extend(l, entry) else {
                continue;
            };
            if !kept_covers(inst, &cand.y) {
                continue;
            }
            let better = match &best[l] {
                None => true,
                Some(cur) => (cand.bars(), &cand.chain) < (cur.bars(), &cur.chain),
            };
            if better {
                best[l] = Some(cand);
            }
        }
    }
    best.into_iter()
        .skip(table.two_n)
        .flatten()
        .filter(|p| is_terminal(table, p) && kept_covers(inst, &p.y))
        .min_by(|a, b| (a.bars(), &a.chain).cmp(&(b.bars(), &b.chain)))
}

enum SearchOutcome {
    Found(Partial),
    Exhausted,
    OverBudget,
}

/// Breadth-first search over chains by bar count. States are deduplicated
/// on (current point, `y`, selected intervals that can still fall inside a
/// later bar). The first valid terminal chain found is minimum and, because
/// chains are expanded in lexicographic order, lexicographically smallest
/// among the minimum ones.
fn search(
    inst: &IntervalInstance,
    table: &BarTable,
    max_bars: usize,
    budget: usize,
    explored: &mut usize,
) -> SearchOutcome {
    let n = inst.n();
    // intervals whose right endpoint is at most p can no longer change status
    let settled_before: Vec<FixedBitSet> = (0..table.size)
        .map(|p| {
            let mut s = FixedBitSet::with_capacity(n);
            for (id, iv) in inst.intervals().iter().enumerate() {
                if iv.right <= p {
                    s.insert(id);
                }
            }
            s
        })
        .collect();
    let key = |p: &Partial| {
        let mut open = p.z.clone();
        open.difference_with(&settled_before[p.at()]);
        (p.at(), p.y.clone(), open)
    };

    let mut seen = HashSet::new();
    let mut level: Vec<Partial> = vec![Partial::start(0, n), Partial::start(1, n)];
    for p in &level {
        seen.insert(key(p));
    }
    *explored += level.len();
    for bars in 1..=max_bars {
        let mut next = Vec::new();
        for p in &level {
            for l in p.at() + 1..table.size {
                let Some(entry) = table.get(p.at(), l) else {
                    continue;
                };
                let Some(cand) = p.extend(l, entry) else {
                    continue;
                };
                if is_terminal(table, &cand) && kept_covers(inst, &cand.y) {
                    return SearchOutcome::Found(cand);
                }
                if seen.insert(key(&cand)) {
                    *explored += 1;
                    if *explored > budget {
                        return SearchOutcome::OverBudget;
                    }
                    next.push(cand);
                }
            }
        }
        debug_assert!(next.iter().all(|p| p.bars() == bars));
        if next.is_empty() {
            break;
        }
        level = next;
    }
    SearchOutcome::Exhausted
}

/// Minimum-bar leaf bar cover.
///
/// A left-to-right sweep yields a valid chain quickly; the breadth-first
/// chain search then either proves a minimum (possibly improving on the
/// sweep) or runs out of its state budget, in which case the sweep's chain
/// is returned uncertified. If the sweep finds nothing valid, the chain of
/// all width-1 bars from 1 to `2n` is used as the starting point; it is
/// always valid because nothing lies inside its bars.
pub fn optimal_leaf_bar_cover(
    inst: &IntervalInstance,
    opts: &CoverOptions,
) -> Result<CoverSolution> {
    if !inst.is_connected() {
        return Err(Error::Disconnected);
    }
    let table = BarTable::new(inst);
    let sweep_chain = sweep(inst, &table);
    let sweep_bars = sweep_chain.as_ref().map(Partial::bars);
    let fallback: Vec<usize> = match &sweep_chain {
        Some(p) => p.chain.clone(),
        None => (1..=table.two_n).collect(),
    };
    let fallback_bars = fallback.len() - 1;
    let limit = opts.max_bars.unwrap_or(usize::MAX);

    let mut explored = 0;
    let outcome = search(
        inst,
        &table,
        limit.min(fallback_bars),
        opts.state_budget,
        &mut explored,
    );
    let (boundaries, certified) = match outcome {
        SearchOutcome::Found(p) => (p.chain, true),
        _ if fallback_bars > limit => return Err(Error::NoCover { max_bars: limit }),
        SearchOutcome::Exhausted => (fallback, true),
        SearchOutcome::OverBudget => (fallback, false),
    };
    let cover = chain_cover(inst, &boundaries)?;
    let verdict = is_leaf_bar_cover(inst, &cover)?;
    if !verdict.is_valid() {
        return Err(Error::precondition(format!(
            "chain {boundaries:?} failed validation on conditions {:?}",
            verdict.failed_conditions()
        )));
    }
    Ok(CoverSolution {
        cover,
        boundaries,
        certified_optimal: certified,
        sweep_bars,
        states_explored: explored,
    })
}
