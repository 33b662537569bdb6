//! Builds the MCS instance from a chord diagram and checks the size relation
//! against the domination number.
//!
//! cargo run --example circle_reduction

use mcs_core::circle::{
    circle_graph, reduce_domset_to_mcs, verify_reduction_lemma, Chord, ChordDiagram,
    REDUCTION_GUARD,
};
use mcs_core::text::write_reduced;

fn main() -> mcs_core::Result<()> {
    // four chords whose circle graph is a path, so two of them dominate
    let d = ChordDiagram::new(vec![
        Chord {
            color: 1,
            a: 1,
            b: 3,
        },
        Chord {
            color: 1,
            a: 2,
            b: 5,
        },
        Chord {
            color: 1,
            a: 4,
            b: 7,
        },
        Chord {
            color: 1,
            a: 6,
            b: 8,
        },
    ])?;
    println!("source edges: {:?}", circle_graph(&d)?.edges());

    let red = reduce_domset_to_mcs(&d);
    print!("{}", write_reduced(&red));

    let v = verify_reduction_lemma(&d, REDUCTION_GUARD)?;
    println!(
        "gamma = {}, |MCS'| = {}, n + gamma = {}, holds {}",
        v.domination_number(),
        v.mcs_size(),
        v.n + v.domination_number(),
        v.holds
    );
    Ok(())
}
