//! Useful covers: a small subset of `O_s` that still covers `I_s` for a
//! leaf bar `s`.
//!
//! `Q = NN(I_s, O_s)` is split by position relative to the bar `(i..j)`:
//! `q_l` lies entirely at or left of `i`, `q_r` entirely at or right of `j`,
//! and `q_o` spans the whole bar. For every color present in `I_s`:
//!
//! * if `q_o` has that color, take its member with the greatest left
//!   endpoint (every `q_o` member meets every interval of `I_s`, so any
//!   of them is at distance 1);
//! * otherwise take the `q_l` member owning the greatest endpoint label and
//!   the `q_r` member owning the lowest endpoint label, when they exist.
//!
//! Selecting by endpoint label rather than by left endpoint matters on the
//! `q_l` side: the `q_l` interval reaching furthest right is never farther
//! from an interval crossing into the bar than any other `q_l` interval,
//! which is what makes the selection cover `I_s`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, VertexId, VertexSubset};
use crate::interval::{leaf_test, Bar, IntervalInstance};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPartition {
    pub q_l: VertexSubset,
    pub q_r: VertexSubset,
    pub q_o: VertexSubset,
}

impl QPartition {
    pub fn all(&self) -> VertexSubset {
        self.q_l
            .iter()
            .chain(self.q_r.iter())
            .chain(self.q_o.iter())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsefulCover {
    pub bar: Bar,
    pub members: VertexSubset,
}

fn leaf_bar_inside(inst: &IntervalInstance, bar: Bar) -> Result<Vec<bool>> {
    inst.check_bar(bar)?;
    let inside = inst.inside_flags(bar);
    if !inside.contains(&true) {
        return Err(Error::precondition(format!(
            "bar {bar} has no interval inside"
        )));
    }
    if !leaf_test(inst, &inside) {
        return Err(Error::precondition(format!("bar {bar} is not a leaf bar")));
    }
    Ok(inside)
}

/// `NN(I_s, O_s)` split into `q_l`, `q_r` and `q_o`.
pub fn partition_q(inst: &IntervalInstance, bar: Bar) -> Result<QPartition> {
    let inside = leaf_bar_inside(inst, bar)?;
    Ok(partition_from_flags(inst, bar, &inside))
}

fn partition_from_flags(inst: &IntervalInstance, bar: Bar, inside: &[bool]) -> QPartition {
    let g = inst.graph();
    let outside: Vec<VertexId> = (0..inst.n()).filter(|&id| !inside[id]).collect();
    let mut in_q = vec![false; inst.n()];
    for v in (0..inst.n()).filter(|&id| inside[id]) {
        let best = outside.iter().map(|&u| g.raw_distance(v, u)).min();
        if let Some(best) = best {
            for &u in &outside {
                if g.raw_distance(v, u) == best {
                    in_q[u] = true;
                }
            }
        }
    }

    let mut part = QPartition {
        q_l: VertexSubset::new(),
        q_r: VertexSubset::new(),
        q_o: VertexSubset::new(),
    };
    for id in (0..inst.n()).filter(|&id| in_q[id]) {
        let iv = inst.interval(id);
        if iv.right <= bar.left {
            part.q_l.insert(id);
        } else if iv.left >= bar.right {
            part.q_r.insert(id);
        } else {
            debug_assert!(iv.left <= bar.left && iv.right >= bar.right);
            part.q_o.insert(id);
        }
    }
    part
}

/// Computes the useful cover `Z_s` of a leaf bar with nonempty `I_s`.
pub fn useful_cover(inst: &IntervalInstance, bar: Bar) -> Result<UsefulCover> {
    let inside = leaf_bar_inside(inst, bar)?;
    Ok(UsefulCover {
        bar,
        members: select_members(inst, bar, &inside).into_iter().collect(),
    })
}

/// Useful cover members for a bar already known to be a leaf bar; empty when
/// nothing lies inside.
pub(crate) fn select_members(inst: &IntervalInstance, bar: Bar, inside: &[bool]) -> Vec<VertexId> {
    let part = partition_from_flags(inst, bar, inside);
    let mut colors: Vec<Color> = (0..inst.n())
        .filter(|&id| inside[id])
        .map(|id| inst.color(id))
        .collect();
    colors.sort_unstable();
    colors.dedup();

    let of_color = |set: &VertexSubset, c: Color| -> Vec<VertexId> {
        set.iter().filter(|&id| inst.color(id) == c).collect()
    };

    let mut members = Vec::new();
    for c in colors {
        let spanning = of_color(&part.q_o, c);
        if let Some(&best) = spanning.iter().max_by_key(|&&id| inst.interval(id).left) {
            members.push(best);
            continue;
        }
        // q_l intervals sit left of the bar, so their greatest endpoint is the right one
        let left = of_color(&part.q_l, c)
            .into_iter()
            .max_by_key(|&id| inst.interval(id).right);
        let right = of_color(&part.q_r, c)
            .into_iter()
            .min_by_key(|&id| inst.interval(id).left);
        assert!(
            left.is_some() || right.is_some(),
            "leaf bar {bar}: color {c} inside has no nearest representative outside"
        );
        members.extend(left);
        members.extend(right);
    }
    members.sort_unstable();
    members.dedup();
    members
}
