//! Splits the nearest outside intervals of a bar by side and picks the
//! useful cover.
//!
//! cargo run --example useful_cover

use mcs_core::graph::VertexSubset;
use mcs_core::interval::{bar_sets, Bar, Interval, IntervalInstance};
use mcs_core::useful_cover::{partition_q, useful_cover};

fn main() -> mcs_core::Result<()> {
    // red a and green c end left of (5..8), red b and green d start right of it,
    // e (red) and f (green) reach inside
    let inst = IntervalInstance::new(vec![
        Interval {
            color: 1,
            left: 1,
            right: 4,
        },
        Interval {
            color: 1,
            left: 9,
            right: 12,
        },
        Interval {
            color: 2,
            left: 2,
            right: 5,
        },
        Interval {
            color: 2,
            left: 8,
            right: 11,
        },
        Interval {
            color: 1,
            left: 3,
            right: 7,
        },
        Interval {
            color: 2,
            left: 6,
            right: 10,
        },
    ])?;
    let bar = Bar::new(5, 8)?;
    let sets = bar_sets(&inst, bar)?;
    let names = |s: &VertexSubset| match s.is_empty() {
        true => "-".to_string(),
        false => s.iter().map(|v| (b'a' + v as u8) as char).collect(),
    };
    println!("bar {bar}: I_s = {}", names(&sets.inside));

    let q = partition_q(&inst, bar)?;
    println!(
        "q_l = {}  q_r = {}  q_o = {}",
        names(&q.q_l),
        names(&q.q_r),
        names(&q.q_o)
    );

    let z = useful_cover(&inst, bar)?;
    println!(
        "Z_s = {} (at most {} allowed)",
        names(&z.members),
        2 * inst.alpha()
    );
    for v in sets.inside.iter() {
        println!(
            "  {} covered: {}",
            (b'a' + v as u8) as char,
            inst.graph().is_covered_by(v, z.members.iter())
        );
    }
    Ok(())
}
