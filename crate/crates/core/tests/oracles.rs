mod common;

use common::{ids, Oracle};
use mcs_core::acs::approximate_consistent_subset;
use mcs_core::circle::circle_graph;
use mcs_core::cover::{
    chain_cover, cover_from_consistent_subset, is_leaf_bar_cover, optimal_leaf_bar_cover,
    CoverOptions,
};
use mcs_core::gen::{random_chord_diagram, random_interval_instance, GenConfig};
use mcs_core::graph::{
    covering_set, exact_mcs, exact_min_dominating_set, is_consistent_subset, nearest_neighbors,
    ExactOptions, VertexSubset,
};
use mcs_core::interval::{leaf_bar_matrix, Interval, IntervalInstance};

fn mask_set(m: u64) -> VertexSubset {
    (0..64).filter(|v| m >> v & 1 == 1).collect()
}

fn corpus(count: u64, max_n: usize) -> impl Iterator<Item = IntervalInstance> {
    (0..count).map(move |seed| {
        let n = 1 + (seed as usize % max_n);
        let alpha = 1 + (seed as usize / max_n) % 3;
        random_interval_instance(&GenConfig::new(n, alpha.min(n), seed)).unwrap()
    })
}

#[test]
fn distances_match_floyd_warshall() {
    for inst in corpus(60, 12) {
        let o = Oracle::from_intervals(&inst);
        let g = inst.graph();
        for u in 0..inst.n() {
            for v in 0..inst.n() {
                assert_eq!(g.distance(u, v), Some(o.dist[u][v]));
            }
        }
    }
}

#[test]
fn overlap_graph_matches_span_test() {
    for inst in corpus(60, 12) {
        let o = Oracle::from_intervals(&inst);
        for u in 0..inst.n() {
            for v in 0..inst.n() {
                assert_eq!(inst.graph().is_adjacent(u, v), o.adj[u][v]);
            }
        }
    }
}

#[test]
fn consistency_matches_enumeration() {
    for inst in corpus(40, 8) {
        let o = Oracle::from_intervals(&inst);
        let g = inst.graph();
        for m in 1u64..1 << inst.n() {
            let s = mask_set(m);
            assert_eq!(
                is_consistent_subset(g, &s).unwrap(),
                o.consistent_ids(s.iter())
            );
        }
    }
}

#[test]
fn covering_set_is_same_colored_nearest() {
    for inst in corpus(30, 8) {
        let g = inst.graph();
        let s: VertexSubset = (0..inst.n()).step_by(2).collect();
        for v in 0..inst.n() {
            let nn = nearest_neighbors(g, v, &s).unwrap();
            let cov = covering_set(g, v, &s).unwrap();
            assert!(cov.is_subset(&nn) && nn.is_subset(&s));
            assert!(cov.iter().all(|u| g.color(u) == g.color(v)));
        }
    }
}

#[test]
fn exact_mcs_is_lexicographically_first_minimum() {
    for inst in corpus(60, 10) {
        let o = Oracle::from_intervals(&inst);
        let best = exact_mcs(inst.graph(), ExactOptions::default())
            .unwrap()
            .unwrap();
        let size = o.min_consistent_size();
        assert_eq!(best.len(), size);
        let first = o
            .all_consistent()
            .into_iter()
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| mask_set(m).to_vec())
            .min()
            .unwrap();
        assert_eq!(ids(&best), first);
    }
}

#[test]
fn domination_matches_enumeration() {
    for seed in 0..40 {
        let d = random_chord_diagram(&GenConfig::new(1 + seed as usize % 9, 1, seed)).unwrap();
        let g = circle_graph(&d).unwrap();
        let o = Oracle::from_chords(&d);
        assert_eq!(
            exact_min_dominating_set(&g, ExactOptions::default())
                .unwrap()
                .len(),
            o.min_dominating_size()
        );
    }
}

#[test]
fn leaf_matrix_matches_oracle() {
    for inst in corpus(60, 10) {
        let o = Oracle::from_intervals(&inst);
        let m = leaf_bar_matrix(&inst);
        for i in 0..=2 * inst.n() {
            for j in i + 1..=2 * inst.n() + 1 {
                assert_eq!(m.get(i, j), o.leaf(&o.inside(i, j)), "({i}..{j})");
            }
        }
    }
}

#[test]
fn leaf_property_is_not_monotone_in_width() {
    let found = corpus(200, 10).any(|inst| {
        let m = leaf_bar_matrix(&inst);
        (0..=2 * inst.n())
            .any(|a| (a + 1..2 * inst.n() + 1).any(|b| m.get(a, b) && !m.get(a, b + 1)))
    });
    assert!(found);
}

#[test]
fn optimal_cover_matches_chain_enumeration() {
    for inst in corpus(120, 6) {
        let sol = optimal_leaf_bar_cover(&inst, &CoverOptions::default()).unwrap();
        assert!(sol.certified_optimal);
        assert_eq!(
            sol.cover.bar_count(),
            Oracle::from_intervals(&inst).min_chain_bars()
        );
        assert!(Oracle::from_intervals(&inst).chain_valid(&sol.boundaries));
    }
}

#[test]
fn single_interval_needs_one_bar() {
    let inst = IntervalInstance::new(vec![Interval {
        color: 1,
        left: 1,
        right: 2,
    }])
    .unwrap();
    let o = Oracle::from_intervals(&inst);
    assert_eq!(o.min_chain_bars(), 1);
    let sol = optimal_leaf_bar_cover(&inst, &CoverOptions::default()).unwrap();
    assert_eq!(sol.cover.bar_count(), 1);
    assert_eq!(ids(&sol.cover.x), vec![0]);
}

#[test]
fn acs_is_consistent_and_small() {
    for inst in corpus(120, 12) {
        let r = approximate_consistent_subset(&inst).unwrap();
        let o = Oracle::from_intervals(&inst);
        assert!(o.consistent_ids(r.acs.iter()));
        let mcs = o.min_consistent_size();
        assert!(r.size() <= (4 * inst.alpha() + 2) * mcs);
    }
}

#[test]
fn cover_from_mcs_is_valid() {
    for inst in corpus(80, 10) {
        let s = exact_mcs(inst.graph(), ExactOptions::default())
            .unwrap()
            .unwrap();
        let c = cover_from_consistent_subset(&inst, &s, ExactOptions::default()).unwrap();
        assert!(is_leaf_bar_cover(&inst, &c).unwrap().is_valid());
        assert_eq!(c.x, s);
        assert!(c.bar_count() <= 2 * s.len() + 1);
    }
}

/// The bars built from a minimum consistent subset are valid with `Z` taken
/// from that subset, but swapping in useful covers can pull an inside
/// interval into `x`. Here every chain of useful covers needs more than
/// `2|MCS| + 1` bars.
#[test]
fn useful_cover_chains_can_exceed_twice_mcs_plus_one() {
    let inst = random_interval_instance(&GenConfig::new(11, 2, 185)).unwrap();
    let s = exact_mcs(inst.graph(), ExactOptions::default())
        .unwrap()
        .unwrap();
    assert_eq!(ids(&s), vec![4, 5]);

    let from_mcs = cover_from_consistent_subset(&inst, &s, ExactOptions::default()).unwrap();
    assert!(is_leaf_bar_cover(&inst, &from_mcs).unwrap().is_valid());
    let boundaries = from_mcs.boundaries().unwrap();
    assert_eq!(boundaries, vec![0, 5, 7, 10, 12, 23]);

    let with_useful = chain_cover(&inst, &boundaries).unwrap();
    let verdict = is_leaf_bar_cover(&inst, &with_useful).unwrap();
    assert_eq!(verdict.failed_conditions(), vec![3]);
    assert_eq!(verdict.overlapping, vec![2]);

    let best = optimal_leaf_bar_cover(&inst, &CoverOptions::default()).unwrap();
    assert!(best.certified_optimal);
    assert_eq!(best.cover.bar_count(), 6);
    assert!(best.cover.bar_count() > 2 * s.len() + 1);
}
