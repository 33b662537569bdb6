//! Colored graph metric: hop distances, nearest neighbours, coverage and
//! consistency, plus exhaustive solvers used as ground truth.
//!
//! Vertex ids are `0..vertex_count`. Colors are `1..=alpha` and every color in
//! that range is carried by at least one vertex.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type Color = u32;

/// Default upper bound on the vertex count accepted by the exhaustive solvers.
pub const DEFAULT_GUARD: usize = 20;

const UNREACHABLE: u32 = u32::MAX;

/// A set of vertex ids, iterated in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(BTreeSet<VertexId>);

impl VertexSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    fn from_mask(mask: u64) -> Self {
        (0..64).filter(|i| mask >> i & 1 == 1).collect()
    }
}

impl FromIterator<VertexId> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSubset(iter.into_iter().collect())
    }
}

impl Extend<VertexId> for VertexSubset {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl<'a> IntoIterator for &'a VertexSubset {
    type Item = &'a VertexId;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<VertexId>> for VertexSubset {
    fn from(v: Vec<VertexId>) -> Self {
        v.into_iter().collect()
    }
}

/// Simple undirected graph with a vertex coloring. Immutable once built.
#[derive(Debug)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<VertexId>>,
    colors: Vec<Color>,
    alpha: usize,
    connected: bool,
    distances: OnceLock<Vec<u32>>,
}

impl Clone for ColoredGraph {
    fn clone(&self) -> Self {
        ColoredGraph {
            adjacency: self.adjacency.clone(),
            colors: self.colors.clone(),
            alpha: self.alpha,
            connected: self.connected,
            distances: OnceLock::new(),
        }
    }
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency && self.colors == other.colors
    }
}

impl Eq for ColoredGraph {}

impl ColoredGraph {
    /// Builds a graph from per-vertex colors and an edge list. Duplicate
    /// edges are merged; self loops and out-of-range ids are rejected.
    pub fn new(colors: Vec<Color>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = colors.len();
        let alpha = colors.iter().copied().max().unwrap_or(0) as usize;
        if colors.contains(&0) {
            return Err(Error::input("colors are numbered from 1"));
        }
        let mut used = vec![false; alpha + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(c) = (1..=alpha).find(|&c| !used[c]) {
            return Err(Error::input(format!(
                "color {c} is unused; colors must be exactly 1..={alpha}"
            )));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::input(format!("self loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }

        let connected = n == 0 || bfs(&adjacency, 0).iter().all(|&d| d != UNREACHABLE);
        Ok(ColoredGraph {
            adjacency,
            colors,
            alpha,
            connected,
            distances: OnceLock::new(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} out of range (graph has {} vertices)",
                self.vertex_count()
            )))
        }
    }

    fn distance_table(&self) -> &[u32] {
        self.distances.get_or_init(|| {
            let n = self.vertex_count();
            let mut table = Vec::with_capacity(n * n);
            for s in 0..n {
                table.extend(bfs(&self.adjacency, s));
            }
            table
        })
    }

    /// Hop distance between `u` and `v`, or `None` when they are in different
    /// components. Backed by an all-pairs table computed on first use.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<u32> {
        let d = self.distance_table()[u * self.vertex_count() + v];
        (d != UNREACHABLE).then_some(d)
    }

    #[inline]
    pub(crate) fn raw_distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.distance_table()[u * self.vertex_count() + v]
    }

    /// Whether some nearest member of `candidates` shares `v`'s color.
    /// Unreachable candidates are ignored; no reachable candidate means
    /// "not covered".
    pub fn is_covered_by<I>(&self, v: VertexId, candidates: I) -> bool
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut best = UNREACHABLE;
        let mut hit = false;
        let color = self.colors[v];
        for u in candidates {
            let d = self.raw_distance(v, u);
            if d < best {
                best = d;
                hit = self.colors[u] == color;
            } else if d == best && d != UNREACHABLE && self.colors[u] == color {
                hit = true;
            }
        }
        hit
    }
}

fn bfs(adjacency: &[Vec<VertexId>], source: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &ColoredGraph, source: VertexId) -> Result<Vec<Option<u32>>> {
    g.check_vertex(source)?;
    Ok(bfs(&g.adjacency, source)
        .into_iter()
        .map(|d| (d != UNREACHABLE).then_some(d))
        .collect())
}

/// A shortest path from `u` to `v` (inclusive), or `None` if disconnected.
/// Among shortest paths, each step goes to the smallest-id neighbour that is
/// one hop closer to `v`.
pub fn shortest_path(g: &ColoredGraph, u: VertexId, v: VertexId) -> Result<Option<Vec<VertexId>>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let to_v = bfs(&g.adjacency, v);
    if to_v[u] == UNREACHABLE {
        return Ok(None);
    }
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        cur = g.adjacency[cur]
            .iter()
            .copied()
            .find(|&w| to_v[w] + 1 == to_v[cur])
            .expect("bfs layers are consistent");
        path.push(cur);
    }
    Ok(Some(path))
}

/// `NN(v, U)`: members of `U` at minimum distance from `v`.
pub fn nearest_neighbors(
    g: &ColoredGraph,
    v: VertexId,
    subset: &VertexSubset,
) -> Result<VertexSubset> {
    g.check_vertex(v)?;
    if subset.is_empty() {
        return Err(Error::input("nearest neighbours of an empty set"));
    }
    for u in subset.iter() {
        g.check_vertex(u)?;
    }
    let best = subset
        .iter()
        .map(|u| g.raw_distance(v, u))
        .min()
        .unwrap_or(UNREACHABLE);
    if best == UNREACHABLE {
        return Ok(VertexSubset::new());
    }
    Ok(subset
        .iter()
        .filter(|&u| g.raw_distance(v, u) == best)
        .collect())
}

/// `COV(v, U)`: nearest neighbours of `v` in `U` that share its color.
pub fn covering_set(g: &ColoredGraph, v: VertexId, subset: &VertexSubset) -> Result<VertexSubset> {
    let nn = nearest_neighbors(g, v, subset)?;
    Ok(nn.iter().filter(|&u| g.color(u) == g.color(v)).collect())
}

/// True iff every vertex has a same-colored vertex among its nearest
/// neighbours in `subset`.
pub fn is_consistent_subset(g: &ColoredGraph, subset: &VertexSubset) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::input("a consistent subset is never empty"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for u in subset.iter() {
        g.check_vertex(u)?;
    }
    let members = subset.to_vec();
    Ok((0..g.vertex_count())
        .all(|v| subset.contains(v) || g.is_covered_by(v, members.iter().copied())))
}

/// Vertices not covered by `subset`, in increasing order.
pub fn uncovered_vertices(g: &ColoredGraph, subset: &VertexSubset) -> Vec<VertexId> {
    let members = subset.to_vec();
    (0..g.vertex_count())
        .filter(|&v| !subset.contains(v) && !g.is_covered_by(v, members.iter().copied()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Largest vertex count the exhaustive search accepts.
    pub guard: usize,
    /// Only look for solutions of at most this many vertices.
    pub budget: Option<usize>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            guard: DEFAULT_GUARD,
            budget: None,
        }
    }
}

impl ExactOptions {
    pub fn with_guard(guard: usize) -> Self {
        ExactOptions {
            guard,
            budget: None,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        // masks are u64
        let limit = self.guard.min(64);
        if n > limit {
            Err(Error::Guard {
                size: n,
                guard: limit,
            })
        } else {
            Ok(())
        }
    }
}

/// Precomputed bitmask view used by the exhaustive searches.
struct MaskView<'g> {
    g: &'g ColoredGraph,
    /// For each vertex, all vertices sorted by distance (reachable only).
    by_distance: Vec<Vec<VertexId>>,
    color_masks: Vec<u64>,
}

impl<'g> MaskView<'g> {
    fn new(g: &'g ColoredGraph) -> Self {
        let n = g.vertex_count();
        let by_distance = (0..n)
            .map(|v| {
                let mut order: Vec<VertexId> = (0..n)
                    .filter(|&u| g.raw_distance(v, u) != UNREACHABLE)
                    .collect();
                order.sort_by_key(|&u| (g.raw_distance(v, u), u));
                order
            })
            .collect();
        let mut color_masks = vec![0u64; g.alpha()];
        for v in 0..n {
            color_masks[g.color(v) as usize - 1] |= 1 << v;
        }
        MaskView {
            g,
            by_distance,
            color_masks,
        }
    }

    fn is_consistent(&self, mask: u64) -> bool {
        if self.color_masks.iter().any(|&c| c & mask == 0) {
            return false;
        }
        let g = self.g;
        (0..g.vertex_count()).all(|v| {
            if mask >> v & 1 == 1 {
                return true;
            }
            let order = &self.by_distance[v];
            let Some(first) = order.iter().position(|&u| mask >> u & 1 == 1) else {
                return false;
            };
            let best = g.raw_distance(v, order[first]);
            order[first..]
                .iter()
                .take_while(|&&u| g.raw_distance(v, u) == best)
                .any(|&u| mask >> u & 1 == 1 && g.color(u) == g.color(v))
        })
    }
}

/// Visits the k-subsets of `0..n` in lexicographic order as bitmasks until
/// `visit` returns true; returns that mask.
fn first_combination(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if visit(mask) {
            return Some(mask);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimum consistent subset by exhaustive search.
///
/// Subsets are tried by increasing size, lexicographically within a size,
/// so the result is the lexicographically smallest optimum. Returns
/// `Ok(None)` only when a budget is set and no consistent subset fits it.
pub fn exact_mcs(g: &ColoredGraph, opts: ExactOptions) -> Result<Option<VertexSubset>> {
    let n = g.vertex_count();
    opts.check(n)?;
    if n == 0 {
        return Err(Error::input("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let view = MaskView::new(g);
    let max_k = opts.budget.unwrap_or(n).min(n);
    // a consistent subset holds every color, so sizes below alpha never work
    for k in g.alpha()..=max_k {
        if let Some(mask) = first_combination(n, k, |m| view.is_consistent(m)) {
            return Ok(Some(VertexSubset::from_mask(mask)));
        }
    }
    Ok(None)
}

/// Minimum dominating set by exhaustive search, lexicographic tie-break.
pub fn exact_min_dominating_set(g: &ColoredGraph, opts: ExactOptions) -> Result<VertexSubset> {
    let n = g.vertex_count();
    opts.check(n)?;
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &u| m | 1 << u))
        .collect();
    for k in 0..=n {
        if let Some(mask) = first_combination(n, k, |m| closed.iter().all(|&c| c & m != 0)) {
            return Ok(VertexSubset::from_mask(mask));
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Whether some nonempty proper subset of `subset` is itself consistent.
pub fn has_consistent_proper_subset(
    g: &ColoredGraph,
    subset: &VertexSubset,
    opts: ExactOptions,
) -> Result<bool> {
    opts.check(subset.len())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let members = subset.to_vec();
    let k = members.len();
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    for pick in 1..full {
        let sub: VertexSubset = (0..k)
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if uncovered_vertices(g, &sub).is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3(colors: [Color; 3]) -> ColoredGraph {
        ColoredGraph::new(colors.to_vec(), &[(0, 1), (1, 2)]).unwrap()
    }

    fn star(leaves: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        ColoredGraph::new(vec![1; leaves + 1], &edges).unwrap()
    }

    fn set(ids: &[VertexId]) -> VertexSubset {
        ids.iter().copied().collect()
    }

    #[test]
    fn distances_on_path() {
        let g = path3([1, 1, 1]);
        assert_eq!(
            bfs_distances(&g, 0).unwrap(),
            vec![Some(0), Some(1), Some(2)]
        );
        for v in 0..3 {
            assert_eq!(bfs_distances(&g, v).unwrap()[v], Some(0));
        }
    }

    #[test]
    fn unreachable_is_none() {
        let g = ColoredGraph::new(vec![1, 1, 1, 1], &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d[2], None);
        assert_eq!(d[3], None);
        assert_eq!(g.distance(1, 3), None);
    }

    #[test]
    fn invalid_vertex_rejected() {
        let g = path3([1, 1, 1]);
        assert!(matches!(bfs_distances(&g, 3), Err(Error::Input(_))));
        assert!(matches!(shortest_path(&g, 0, 9), Err(Error::Input(_))));
    }

    #[test]
    fn paths() {
        let g = path3([1, 1, 1]);
        assert_eq!(shortest_path(&g, 0, 2).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(shortest_path(&g, 1, 1).unwrap(), Some(vec![1]));
        let split = ColoredGraph::new(vec![1, 1, 1], &[(0, 1)]).unwrap();
        assert_eq!(shortest_path(&split, 0, 2).unwrap(), None);
    }

    #[test]
    fn nearest_and_covering() {
        let g = path3([1, 2, 1]);
        assert_eq!(nearest_neighbors(&g, 0, &set(&[0, 2])).unwrap(), set(&[0]));
        assert_eq!(nearest_neighbors(&g, 0, &set(&[1, 2])).unwrap(), set(&[1]));
        assert_eq!(covering_set(&g, 0, &set(&[0])).unwrap(), set(&[0]));
        assert!(covering_set(&g, 0, &set(&[1, 2])).unwrap().is_empty());
        assert_eq!(covering_set(&g, 0, &set(&[2])).unwrap(), set(&[2]));
        assert!(nearest_neighbors(&g, 0, &VertexSubset::new()).is_err());

        let s = star(4);
        assert_eq!(
            nearest_neighbors(&s, 0, &set(&[1, 2, 3, 4])).unwrap(),
            set(&[1, 2, 3, 4])
        );
    }

    #[test]
    fn consistency_basics() {
        let g = path3([1, 2, 1]);
        assert!(is_consistent_subset(&g, &set(&[0, 1, 2])).unwrap());
        assert!(!is_consistent_subset(&g, &set(&[0, 1])).unwrap());
        assert!(matches!(
            is_consistent_subset(&g, &VertexSubset::new()),
            Err(Error::Input(_))
        ));

        let k2 = ColoredGraph::new(vec![1, 2], &[(0, 1)]).unwrap();
        assert!(!is_consistent_subset(&k2, &set(&[0])).unwrap());
        assert!(!is_consistent_subset(&k2, &set(&[1])).unwrap());

        let split = ColoredGraph::new(vec![1, 1], &[]).unwrap();
        assert_eq!(
            is_consistent_subset(&split, &set(&[0])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn exact_small_cases() {
        let g = path3([1, 1, 1]);
        assert_eq!(
            exact_mcs(&g, ExactOptions::default()).unwrap(),
            Some(set(&[0]))
        );
        let k2 = ColoredGraph::new(vec![1, 2], &[(0, 1)]).unwrap();
        assert_eq!(
            exact_mcs(&k2, ExactOptions::default()).unwrap(),
            Some(set(&[0, 1]))
        );
        let budgeted = ExactOptions {
            budget: Some(1),
            ..Default::default()
        };
        assert_eq!(exact_mcs(&k2, budgeted).unwrap(), None);
    }

    #[test]
    fn guard_is_enforced() {
        let g = ColoredGraph::new(
            vec![1; 21],
            &(0..20).map(|i| (i, i + 1)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(
            exact_mcs(&g, ExactOptions::default()),
            Err(Error::Guard {
                size: 21,
                guard: 20
            })
        );
        assert!(exact_mcs(&g, ExactOptions::with_guard(21)).is_ok());
        assert!(exact_min_dominating_set(&g, ExactOptions::default()).is_err());
    }

    #[test]
    fn dominating_sets() {
        assert_eq!(
            exact_min_dominating_set(&star(5), ExactOptions::default()).unwrap(),
            set(&[0])
        );
        assert_eq!(
            exact_min_dominating_set(&path3([1, 1, 1]), ExactOptions::default()).unwrap(),
            set(&[1])
        );
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(ColoredGraph::new(vec![1, 3], &[(0, 1)]).is_err());
        assert!(ColoredGraph::new(vec![0, 1], &[(0, 1)]).is_err());
        assert!(ColoredGraph::new(vec![1, 1], &[(0, 0)]).is_err());
        assert!(ColoredGraph::new(vec![1, 1], &[(0, 2)]).is_err());
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        first_combination(4, 2, |m| {
            seen.push(m);
            false
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    }
}
