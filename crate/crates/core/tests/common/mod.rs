//! Reference implementations built from raw interval / edge data only.
//! Distances come from Floyd-Warshall, subsets from plain mask enumeration.

#![allow(dead_code)]

use mcs_core::circle::ChordDiagram;
use mcs_core::graph::ColoredGraph;
use mcs_core::interval::IntervalInstance;

pub const INF: u32 = u32::MAX / 4;

pub struct Oracle {
    pub n: usize,
    pub colors: Vec<u32>,
    pub adj: Vec<Vec<bool>>,
    pub dist: Vec<Vec<u32>>,
    /// `(left, right)` labels when built from intervals.
    pub spans: Vec<(usize, usize)>,
}

impl Oracle {
    fn build(colors: Vec<u32>, adj: Vec<Vec<bool>>, spans: Vec<(usize, usize)>) -> Self {
        let n = colors.len();
        let mut dist = vec![vec![INF; n]; n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    dist[u][v] = 0;
                } else if adj[u][v] {
                    dist[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        Oracle {
            n,
            colors,
            adj,
            dist,
            spans,
        }
    }

    pub fn from_intervals(inst: &IntervalInstance) -> Self {
        let spans: Vec<(usize, usize)> = inst
            .intervals()
            .iter()
            .map(|iv| (iv.left, iv.right))
            .collect();
        let n = spans.len();
        let mut adj = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                // two intervals meet unless one ends before the other starts
                adj[a][b] = a != b && !(spans[a].1 < spans[b].0 || spans[b].1 < spans[a].0);
            }
        }
        Oracle::build(
            inst.intervals().iter().map(|iv| iv.color).collect(),
            adj,
            spans,
        )
    }

    pub fn from_graph(g: &ColoredGraph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Oracle::build(g.colors().to_vec(), adj, Vec::new())
    }

    pub fn from_chords(d: &ChordDiagram) -> Self {
        let c = d.chords();
        let n = c.len();
        let mut adj = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    // interleaving: exactly one endpoint of y on the arc a..b of x
                    let on_arc = |p: usize| c[x].a < p && p < c[x].b;
                    adj[x][y] = on_arc(c[y].a) ^ on_arc(c[y].b);
                }
            }
        }
        Oracle::build(c.iter().map(|ch| ch.color).collect(), adj, Vec::new())
    }

    pub fn connected(&self) -> bool {
        (0..self.n).all(|v| self.dist[0][v] < INF)
    }

    /// Whether `v` has a same-colored member of `subset` among its nearest.
    pub fn covered(&self, v: usize, subset: &[bool]) -> bool {
        let best = (0..self.n)
            .filter(|&u| subset[u])
            .map(|u| self.dist[v][u])
            .min();
        match best {
            Some(d) if d < INF => (0..self.n)
                .any(|u| subset[u] && self.dist[v][u] == d && self.colors[u] == self.colors[v]),
            _ => false,
        }
    }

    pub fn consistent(&self, subset: &[bool]) -> bool {
        (0..self.n).all(|v| self.covered(v, subset))
    }

    pub fn consistent_ids(&self, ids: impl IntoIterator<Item = usize>) -> bool {
        self.consistent(&self.flags(ids))
    }

    pub fn flags(&self, ids: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut f = vec![false; self.n];
        for id in ids {
            f[id] = true;
        }
        f
    }

    fn mask_flags(&self, mask: u64) -> Vec<bool> {
        (0..self.n).map(|v| mask >> v & 1 == 1).collect()
    }

    /// Every consistent subset, as masks.
    pub fn all_consistent(&self) -> Vec<u64> {
        (1u64..1 << self.n)
            .filter(|&m| self.consistent(&self.mask_flags(m)))
            .collect()
    }

    pub fn min_consistent_size(&self) -> usize {
        let mut best = self.n;
        for m in 1u64..1 << self.n {
            let k = m.count_ones() as usize;
            if k < best && self.consistent(&self.mask_flags(m)) {
                best = k;
            }
        }
        best
    }

    pub fn min_dominating_size(&self) -> usize {
        let mut best = self.n;
        for m in 1u64..1 << self.n {
            let k = m.count_ones() as usize;
            if k < best
                && (0..self.n).all(|v| {
                    m >> v & 1 == 1 || (0..self.n).any(|u| m >> u & 1 == 1 && self.adj[v][u])
                })
            {
                best = k;
            }
        }
        best
    }

    // ---- interval-only helpers -------------------------------------------

    /// Intervals with an endpoint strictly between `i` and `j`.
    pub fn inside(&self, i: usize, j: usize) -> Vec<bool> {
        self.spans
            .iter()
            .map(|&(l, r)| (i < l && l < j) || (i < r && r < j))
            .collect()
    }

    pub fn leaf(&self, inside: &[bool]) -> bool {
        let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
        (0..self.n)
            .filter(|&v| inside[v])
            .all(|v| self.covered(v, &outside))
    }

    /// Useful cover from its definition.
    pub fn useful_cover(&self, i: usize, j: usize, inside: &[bool]) -> Vec<usize> {
        let outside: Vec<usize> = (0..self.n).filter(|&u| !inside[u]).collect();
        let mut q = vec![false; self.n];
        for v in (0..self.n).filter(|&v| inside[v]) {
            if let Some(d) = outside.iter().map(|&u| self.dist[v][u]).min() {
                for &u in &outside {
                    if self.dist[v][u] == d {
                        q[u] = true;
                    }
                }
            }
        }
        let mut colors: Vec<u32> = (0..self.n)
            .filter(|&v| inside[v])
            .map(|v| self.colors[v])
            .collect();
        colors.sort();
        colors.dedup();
        let mut z = Vec::new();
        for c in colors {
            let members = (0..self.n).filter(|&u| q[u] && self.colors[u] == c);
            let (mut spanning, mut left, mut right) = (Vec::new(), Vec::new(), Vec::new());
            for u in members {
                let (l, r) = self.spans[u];
                if r <= i {
                    left.push(u);
                } else if l >= j {
                    right.push(u);
                } else {
                    spanning.push(u);
                }
            }
            if let Some(&u) = spanning.iter().max_by_key(|&&u| self.spans[u].0) {
                z.push(u);
            } else {
                z.extend(left.iter().max_by_key(|&&u| self.spans[u].1));
                z.extend(right.iter().min_by_key(|&&u| self.spans[u].0));
            }
        }
        z.sort();
        z.dedup();
        z
    }

    /// Whether the chain of boundary points is a valid cover: all bars leaf,
    /// no useful-cover member inside any bar, and the inside intervals
    /// covered by the rest.
    pub fn chain_valid(&self, chain: &[usize]) -> bool {
        let mut y = vec![false; self.n];
        let mut z = vec![false; self.n];
        for w in chain.windows(2) {
            let inside = self.inside(w[0], w[1]);
            if !self.leaf(&inside) {
                return false;
            }
            for u in self.useful_cover(w[0], w[1], &inside) {
                z[u] = true;
            }
            for v in 0..self.n {
                y[v] |= inside[v];
            }
        }
        if (0..self.n).any(|v| y[v] && z[v]) {
            return false;
        }
        let x: Vec<bool> = y.iter().map(|&b| !b).collect();
        (0..self.n).filter(|&v| y[v]).all(|v| self.covered(v, &x))
    }

    /// Fewest bars over all valid chains starting at 0 or 1 and ending at
    /// 2n or 2n+1.
    pub fn min_chain_bars(&self) -> usize {
        let two_n = 2 * self.n;
        let mut best = usize::MAX;
        for k0 in [0, 1] {
            for km in [two_n, two_n + 1] {
                let inner: Vec<usize> = (k0 + 1..km).collect();
                for pick in 0u64..1 << inner.len() {
                    let bars = pick.count_ones() as usize + 1;
                    if bars >= best {
                        continue;
                    }
                    let mut chain = vec![k0];
                    chain.extend(
                        inner
                            .iter()
                            .enumerate()
                            .filter(|(b, _)| pick >> b & 1 == 1)
                            .map(|(_, &p)| p),
                    );
                    chain.push(km);
                    if self.chain_valid(&chain) {
                        best = bars;
                    }
                }
            }
        }
        best
    }
}

/// Set of ids from a library subset.
pub fn ids(s: &mcs_core::graph::VertexSubset) -> Vec<usize> {
    s.iter().collect()
}
