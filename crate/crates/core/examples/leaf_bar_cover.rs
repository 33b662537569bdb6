//! Minimum leaf bar cover of a random layout, next to the cover built from an
//! exact minimum consistent subset.
//!
//! cargo run --example leaf_bar_cover -- [seed]

use mcs_core::cover::{
    cover_from_consistent_subset, is_leaf_bar_cover, optimal_leaf_bar_cover, CoverOptions,
};
use mcs_core::gen::{random_interval_instance, GenConfig};
use mcs_core::graph::{exact_mcs, ExactOptions, VertexSubset};

fn one_based(s: &VertexSubset) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn main() -> mcs_core::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(185);
    let inst = random_interval_instance(&GenConfig::new(11, 2, seed))?;

    let sol = optimal_leaf_bar_cover(&inst, &CoverOptions::default())?;
    println!(
        "minimum cover: {} bars, certified {}",
        sol.cover.bar_count(),
        sol.certified_optimal
    );
    for (bar, z) in sol.cover.bars.iter().zip(&sol.cover.zs) {
        println!("  {:<10} Z = {:?}", bar.to_string(), one_based(z));
    }
    println!("  x = {:?}", one_based(&sol.cover.x));

    let mcs = exact_mcs(inst.graph(), ExactOptions::default())?.expect("no budget");
    let from_mcs = cover_from_consistent_subset(&inst, &mcs, ExactOptions::default())?;
    let verdict = is_leaf_bar_cover(&inst, &from_mcs)?;
    println!(
        "cover from MCS {:?}: {} bars, valid {}, non-leaf bars {:?}",
        one_based(&mcs),
        from_mcs.bar_count(),
        verdict.is_valid(),
        verdict.non_leaf_bars
    );
    Ok(())
}
