//! Writes a small seeded corpus of interval and chord instances.
//!
//! cargo run --example generate_corpus -- <out-dir>

use std::fs;
use std::path::PathBuf;

use mcs_core::gen::{random_chord_diagram, random_interval_instance, GenConfig};
use mcs_core::text::{write_chords, write_intervals};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    fs::create_dir_all(&out)?;
    let mut manifest = String::from("file\tkind\tn\talpha\tseed\n");
    for seed in 0..5u64 {
        for (n, alpha) in [(8, 2), (12, 3)] {
            let cfg = GenConfig::new(n, alpha, seed);
            let name = format!("interval_n{n}_a{alpha}_s{seed}.txt");
            fs::write(
                out.join(&name),
                write_intervals(&random_interval_instance(&cfg)?),
            )?;
            manifest.push_str(&format!("{name}\tinterval\t{n}\t{alpha}\t{seed}\n"));
        }
        let cfg = GenConfig::new(6, 1, seed);
        let name = format!("chords_n6_a1_s{seed}.txt");
        fs::write(out.join(&name), write_chords(&random_chord_diagram(&cfg)?))?;
        manifest.push_str(&format!("{name}\tchords\t6\t1\t{seed}\n"));
    }
    fs::write(out.join("manifest.tsv"), &manifest)?;
    println!(
        "wrote {} files to {}",
        manifest.lines().count() - 1,
        out.display()
    );
    Ok(())
}
