//! Approximate consistent subset with the exact answer for comparison.
//!
//! cargo run --release --example approximate -- [n] [alpha] [seed]

use mcs_core::acs::{approximation_report, AcsOptions};
use mcs_core::gen::{random_interval_instance, GenConfig};
use mcs_core::graph::DEFAULT_GUARD;

fn main() -> mcs_core::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = *args.first().unwrap_or(&12) as usize;
    let alpha = *args.get(1).unwrap_or(&2) as usize;
    let seed = *args.get(2).unwrap_or(&1);

    let inst = random_interval_instance(&GenConfig::new(n, alpha, seed))?;
    let r = approximation_report(
        &inst,
        n <= DEFAULT_GUARD,
        &AcsOptions::default(),
        DEFAULT_GUARD,
    )?;
    println!("ACS {:?}", r.acs.iter().map(|v| v + 1).collect::<Vec<_>>());
    println!(
        "size {} from {} bars (repairs {}, degraded {})",
        r.size(),
        r.bar_count,
        r.repair_added,
        r.degraded
    );
    match (r.exact_size, r.achieved_ratio) {
        (Some(k), Some(ratio)) => println!("exact {k}, ratio {ratio:.3}, bound {}", r.ratio_bound),
        _ => println!("exact solver skipped above {DEFAULT_GUARD} intervals"),
    }
    println!(
        "{}",
        serde_json::to_string(&r.document(false)).expect("serializable")
    );
    Ok(())
}
