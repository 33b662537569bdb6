//! Chord diagrams, circle graphs, and the reduction from minimum dominating
//! set on circle graphs to minimum consistent subset.
//!
//! Chord endpoints are labels `1..=2n` read clockwise. Two chords are
//! adjacent when their endpoints interleave.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    exact_mcs, exact_min_dominating_set, is_consistent_subset, Color, ColoredGraph, ExactOptions,
    VertexId, VertexSubset,
};

/// Brute-force guard on the source diagram size for [`verify_reduction_lemma`].
pub const REDUCTION_GUARD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub color: Color,
    /// Smaller endpoint.
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDiagram {
    chords: Vec<Chord>,
}

impl ChordDiagram {
    /// Endpoints must be exactly `1..=2n`, each used once. Each chord is
    /// stored with `a < b`.
    pub fn new(chords: Vec<Chord>) -> Result<Self> {
        let n = chords.len();
        if n == 0 {
            return Err(Error::input("a chord diagram needs at least one chord"));
        }
        let mut used = vec![false; 2 * n + 1];
        let mut out = Vec::with_capacity(n);
        for (id, c) in chords.into_iter().enumerate() {
            if c.a == c.b {
                return Err(Error::input(format!("chord {id} has equal endpoints")));
            }
            for p in [c.a, c.b] {
                if p == 0 || p > 2 * n {
                    return Err(Error::input(format!(
                        "chord {id}: endpoint {p} outside 1..={}",
                        2 * n
                    )));
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::input(format!(
                        "endpoint {p} is shared by two chords"
                    )));
                }
            }
            out.push(Chord {
                color: c.color,
                a: c.a.min(c.b),
                b: c.a.max(c.b),
            });
        }
        Ok(ChordDiagram { chords: out })
    }

    pub fn n(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }
}

/// Whether two chords cross. Chords sharing an endpoint are rejected.
pub fn chords_cross(x: &Chord, y: &Chord) -> Result<bool> {
    let (xa, xb) = (x.a.min(x.b), x.a.max(x.b));
    let (ya, yb) = (y.a.min(y.b), y.a.max(y.b));
    if xa == ya || xa == yb || xb == ya || xb == yb {
        return Err(Error::input("chords share an endpoint"));
    }
    let inside = |p: usize| xa < p && p < xb;
    Ok(inside(ya) != inside(yb))
}

pub fn circle_graph(d: &ChordDiagram) -> Result<ColoredGraph> {
    let c = d.chords();
    let mut edges = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if chords_cross(&c[i], &c[j])? {
                edges.push((i, j));
            }
        }
    }
    ColoredGraph::new(c.iter().map(|ch| ch.color).collect(), &edges)
}

/// The MCS instance built from a chord diagram `T`.
///
/// Chords `0..n` are copies of the source chords (`V1`, color 1); chord
/// `n + i` is the pendant of copy `i` (`V2`, color `i + 2`). Each pendant
/// crosses only its own copy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedInstance {
    pub diagram: ChordDiagram,
    pub source_n: usize,
    /// `pendant_of[i]` is the chord id of the pendant attached to copy `i`.
    pub pendant_of: Vec<VertexId>,
}

impl ReducedInstance {
    pub fn graph(&self) -> Result<ColoredGraph> {
        circle_graph(&self.diagram)
    }

    pub fn v1(&self) -> VertexSubset {
        (0..self.source_n).collect()
    }

    pub fn v2(&self) -> VertexSubset {
        (self.source_n..2 * self.source_n).collect()
    }
}

pub fn reduce_domset_to_mcs(d: &ChordDiagram) -> ReducedInstance {
    let n = d.n();
    let mut owner = vec![0; 2 * n + 1];
    for (id, c) in d.chords().iter().enumerate() {
        owner[c.a] = id;
        owner[c.b] = id;
    }
    let mut copies = vec![(0, 0); n];
    let mut pendants = vec![(0, 0); n];
    let mut next = 1;
    for (p, &id) in owner.iter().enumerate().skip(1) {
        if d.chords()[id].a == p {
            // pendant endpoints flank the copy's lower endpoint
            pendants[id] = (next, next + 2);
            copies[id].0 = next + 1;
            next += 3;
        } else {
            copies[id].1 = next;
            next += 1;
        }
    }
    let mut chords: Vec<Chord> = copies
        .iter()
        .map(|&(a, b)| Chord { color: 1, a, b })
        .collect();
    chords.extend(pendants.iter().enumerate().map(|(i, &(a, b))| Chord {
        color: i as Color + 2,
        a,
        b,
    }));
    ReducedInstance {
        diagram: ChordDiagram::new(chords).expect("relabelling is a permutation"),
        source_n: n,
        pendant_of: (n..2 * n).collect(),
    }
}

/// The consistent subset `V2 ∪ A'` of the reduced instance built from a
/// dominating set `A` of the source graph.
pub fn forward_witness(red: &ReducedInstance, dominating: &VertexSubset) -> VertexSubset {
    let mut s = red.v2();
    s.extend(dominating.iter());
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionVerdict {
    pub n: usize,
    pub dominating_set: VertexSubset,
    pub mcs: VertexSubset,
    /// `|MCS(T')| == n + γ(T)`.
    pub holds: bool,
    /// `V2` plus the copies of the dominating set is consistent in `T'`.
    pub witness_consistent: bool,
}

impl ReductionVerdict {
    pub fn domination_number(&self) -> usize {
        self.dominating_set.len()
    }

    pub fn mcs_size(&self) -> usize {
        self.mcs.len()
    }
}

/// Checks `|MCS(T')| = n + γ(T)` by brute force on both sides. `guard`
/// bounds the source chord count.
pub fn verify_reduction_lemma(d: &ChordDiagram, guard: usize) -> Result<ReductionVerdict> {
    let n = d.n();
    if n > guard {
        return Err(Error::Guard { size: n, guard });
    }
    let source = circle_graph(d)?;
    if !source.is_connected() {
        return Err(Error::Disconnected);
    }
    let red = reduce_domset_to_mcs(d);
    let reduced = red.graph()?;
    let dominating = exact_min_dominating_set(&source, ExactOptions::with_guard(n))?;
    let mcs = exact_mcs(&reduced, ExactOptions::with_guard(2 * n))?.expect("no budget set");
    let witness = forward_witness(&red, &dominating);
    Ok(ReductionVerdict {
        n,
        holds: mcs.len() == n + dominating.len(),
        witness_consistent: is_consistent_subset(&reduced, &witness)?,
        dominating_set: dominating,
        mcs,
    })
}
