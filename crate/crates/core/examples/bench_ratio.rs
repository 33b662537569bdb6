//! Ratio benchmark over seeded instances, CSV on stdout.
//!
//! cargo run --release --example bench_ratio -- [n] [alpha] [trials]

use mcs_core::bench::{run_bench, summarize, write_csv, BenchConfig};

fn main() -> mcs_core::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut cfg = BenchConfig::new(
        *args.first().unwrap_or(&10),
        *args.get(1).unwrap_or(&2),
        *args.get(2).unwrap_or(&25),
        0,
    );
    cfg.exact_max = 16;
    let rows = run_bench(&cfg)?;
    write_csv(&rows, std::io::stdout().lock())?;
    if let Some(s) = summarize(&rows) {
        eprintln!(
            "{} rated rows, max ratio {:.3}, bound {}",
            s.rated,
            s.max_ratio,
            4 * cfg.alpha + 2
        );
    }
    Ok(())
}
