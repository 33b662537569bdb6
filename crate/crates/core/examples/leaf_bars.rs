//! Prints the leaf-bar matrix of a small interval layout.
//!
//! cargo run --example leaf_bars

use mcs_core::interval::{bar_sets, leaf_bar_matrix, normalize, RawInterval};

fn main() -> mcs_core::Result<()> {
    let inst = normalize(&[
        RawInterval::new(1, 0.0, 4.0),
        RawInterval::new(2, 1.5, 6.0),
        RawInterval::new(1, 3.0, 9.0),
        RawInterval::new(2, 7.0, 11.0),
        RawInterval::new(1, 8.0, 10.0),
    ])?;
    for (id, iv) in inst.intervals().iter().enumerate() {
        println!(
            "interval {} color {} [{}, {}]",
            id + 1,
            iv.color,
            iv.left,
            iv.right
        );
    }

    let m = leaf_bar_matrix(&inst);
    print!("\n    ");
    for j in 0..m.size() {
        print!("{j:>3}");
    }
    println!();
    for i in 0..m.size() {
        print!("{i:>3} ");
        for j in 0..m.size() {
            let cell = if j <= i {
                "  ."
            } else if m.get(i, j) {
                "  1"
            } else {
                "  0"
            };
            print!("{cell}");
        }
        println!();
    }

    let widest = m
        .leaf_bars()
        .max_by_key(|b| b.right - b.left)
        .expect("unit bars are always leaf");
    let sets = bar_sets(&inst, widest)?;
    let one_based = |s: &mcs_core::graph::VertexSubset| s.iter().map(|v| v + 1).collect::<Vec<_>>();
    println!(
        "\nwidest leaf bar {widest}: inside {:?}, outside {:?}",
        one_based(&sets.inside),
        one_based(&sets.outside)
    );
    Ok(())
}
