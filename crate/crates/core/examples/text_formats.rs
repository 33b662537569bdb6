//! Reads the three text formats and writes them back.
//!
//! cargo run --example text_formats

use mcs_core::circle::circle_graph;
use mcs_core::text::{parse_instance, write_graph, write_intervals, Instance};

const INPUTS: [&str; 3] = [
    "# a path on three vertices\ngraph 3 2\nv 1 1\nv 2 2\nv 3 1\ne 1 2\ne 2 3\n",
    "interval 3 2\ni 1 1 0.0 2.5\ni 2 2 1.0 4.0\ni 3 1 3.5 9.0\n",
    "chords 2\nc 1 1 1 3\nc 2 2 2 4\n",
];

fn main() -> mcs_core::Result<()> {
    for input in INPUTS {
        match parse_instance(input)? {
            Instance::Graph(g) => print!("{}", write_graph(&g)),
            // real endpoints come back as ranks
            Instance::Intervals(inst) => print!("{}", write_intervals(&inst)),
            Instance::Chords(f) => println!(
                "{} chords, crossing pairs {:?}",
                f.diagram.n(),
                circle_graph(&f.diagram)?.edges()
            ),
        }
        println!();
    }
    Ok(())
}
