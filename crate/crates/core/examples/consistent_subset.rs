//! Consistency checks and exact minimum consistent subsets on a small graph.
//!
//! cargo run --example consistent_subset

use mcs_core::graph::{
    exact_mcs, is_consistent_subset, nearest_neighbors, uncovered_vertices, ColoredGraph,
    ExactOptions, VertexSubset,
};

fn main() -> mcs_core::Result<()> {
    // a 6-cycle colored red, red, blue, blue, red, blue
    let colors = vec![1, 1, 2, 2, 1, 2];
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
    let g = ColoredGraph::new(colors, &edges)?;

    let guess: VertexSubset = [0, 3].into_iter().collect();
    println!("{{1, 4}} consistent: {}", is_consistent_subset(&g, &guess)?);
    for v in uncovered_vertices(&g, &guess) {
        let nearest: Vec<usize> = nearest_neighbors(&g, v, &guess)?
            .iter()
            .map(|u| u + 1)
            .collect();
        println!(
            "  vertex {} is not covered, its nearest members are {nearest:?}",
            v + 1
        );
    }

    let best = exact_mcs(&g, ExactOptions::default())?.expect("full set is always consistent");
    let one_based: Vec<usize> = best.iter().map(|v| v + 1).collect();
    println!(
        "minimum consistent subset: {one_based:?} (size {})",
        best.len()
    );
    Ok(())
}
