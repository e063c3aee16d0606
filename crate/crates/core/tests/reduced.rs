mod common;

use proptest::prelude::*;

use common::{degree_square_brute, embeds_brute, mirror, q_neighbours, s_set_brute};
use turan_core::catalog::{build, Named};
use turan_core::graph::ThreeGraph;
use turan_core::reduced::{
    degree_square_stat, embeds, embeds_with, is_d_dense, project_q, random_reduced, s_set, EmbedMode,
    ReducedThreeGraph,
};

fn targets() -> Vec<ThreeGraph> {
    vec![
        build(&Named::SingleEdge).unwrap(),
        build(&Named::K4Minus).unwrap(),
        ThreeGraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap(),
        ThreeGraph::new(4, [[0, 1, 3], [0, 2, 3]]).unwrap(),
        ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap(),
    ]
}

fn small_reduced() -> impl Strategy<Value = ReducedThreeGraph> {
    (3usize..=5, 1usize..=2, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(i, s, p, seed)| random_reduced(i, s, p, seed).unwrap())
}

fn mode_flag(mode: EmbedMode) -> bool {
    mode == EmbedMode::OrderRespecting
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn embedding_matches_brute_force(a in small_reduced()) {
        for f in targets() {
            for mode in [EmbedMode::OrderRespecting, EmbedMode::Injective] {
                let found = embeds_with(&a, &f, mode).unwrap();
                if let Some(w) = &found {
                    prop_assert_eq!(w.check(&a, &f), Ok(()));
                    if mode == EmbedMode::OrderRespecting {
                        prop_assert!(w.phi.windows(2).all(|p| p[0] < p[1]));
                    }
                }
                prop_assert_eq!(found.is_some(), embeds_brute(&a, &f, mode_flag(mode)), "{:?} {:?}", f, mode);
            }
        }
    }

    #[test]
    fn reverse_symmetry(a in small_reduced()) {
        let rev = a.reverse();
        prop_assert_eq!(rev.reverse(), a.clone());
        prop_assert_eq!(rev.edge_count(), a.edge_count());
        for f in targets() {
            prop_assert_eq!(embeds(&a, &f).unwrap().is_some(), embeds(&rev, &mirror(&f)).unwrap().is_some());
            prop_assert_eq!(
                embeds_with(&a, &f, EmbedMode::Injective).unwrap().is_some(),
                embeds_with(&rev, &f, EmbedMode::Injective).unwrap().is_some()
            );
        }
    }

    #[test]
    fn adding_edges_preserves_embedding(a in small_reduced(), extra in any::<u64>()) {
        let mut bigger = a.clone();
        let more = random_reduced(a.indices().len(), a.class_size(1, 2), 0.3, extra).unwrap();
        for t in more.triples().collect::<Vec<_>>() {
            for e in more.constituent(t[0], t[1], t[2]).collect::<Vec<_>>() {
                bigger.insert_edge(t, e).unwrap();
            }
        }
        for f in targets() {
            if embeds(&a, &f).unwrap().is_some() {
                prop_assert!(embeds(&bigger, &f).unwrap().is_some());
            }
            if embeds(&bigger, &f).unwrap().is_none() {
                prop_assert!(embeds(&a, &f).unwrap().is_none());
            }
        }
    }

    #[test]
    fn projection_matches_recount(
        s in 1usize..=6,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
        eps in 0.05f64..=1.0,
        r in 1u32..=4,
    ) {
        let a = random_reduced(4, s, p, seed).unwrap();
        for t in a.triples().collect::<Vec<_>>() {
            let q = project_q(&a, t[0], t[1], t[2], eps).unwrap();
            prop_assert_eq!(&q.neighbours, &q_neighbours(&a, t, eps));
            let stat = degree_square_stat(&q, eps);
            prop_assert_eq!((stat.sum, stat.holds), degree_square_brute(&a, t, eps));
            prop_assert_eq!(s_set(&a, t[0], t[1], t[2], eps, r).unwrap(), s_set_brute(&a, t, eps, r));
        }
    }
}

#[test]
fn removing_a_used_edge_can_break_a_planted_copy() {
    let mut a = ReducedThreeGraph::empty(&[1, 2, 3, 4], 2).unwrap();
    a.insert_edge([1, 2, 3], [0, 1, 1]).unwrap();
    let f = build(&Named::SingleEdge).unwrap();
    let w = embeds(&a, &f).unwrap().unwrap();
    assert_eq!(w.phi, vec![1, 2, 3]);
    assert!(a.remove_edge([1, 2, 3], [0, 1, 1]));
    assert!(embeds(&a, &f).unwrap().is_none());
}

#[test]
fn orientation_matters_without_injective_mode() {
    // edges 124 and 134 share the pair 14; in index order that pair is the top
    let mut a = ReducedThreeGraph::empty(&[1, 2, 3, 4], 1).unwrap();
    a.insert_edge([1, 2, 4], [0, 0, 0]).unwrap();
    a.insert_edge([1, 3, 4], [0, 0, 0]).unwrap();
    let f = ThreeGraph::new(4, [[0, 1, 3], [0, 2, 3]]).unwrap();
    assert!(embeds(&a, &f).unwrap().is_some());
    let flipped = ThreeGraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
    assert!(embeds(&a, &flipped).unwrap().is_none());
    assert!(embeds_with(&a, &flipped, EmbedMode::Injective).unwrap().is_some());
    assert!(embeds(&a.reverse(), &mirror(&f)).unwrap().is_some());
}

#[test]
fn random_reduced_density_tracks_probability() {
    let a = random_reduced(5, 4, 0.5, 11).unwrap();
    let total = a.triples().count() * 64;
    let density = a.edge_count() as f64 / total as f64;
    assert!(density > 0.3 && density < 0.7, "{density}");
    let check = is_d_dense(&a, 0.3).unwrap();
    let (_, worst) = check.worst.unwrap();
    assert_eq!(check.dense, worst >= 0.3);
    assert!(is_d_dense(&ReducedThreeGraph::complete(&[1, 2, 3], 2).unwrap(), 1.0).unwrap().dense);
    assert!(random_reduced(9, 2, 0.5, 0).is_err());
    assert!(random_reduced(3, 17, 0.5, 0).is_err());
}

#[test]
fn targets_larger_than_the_index_set_never_embed() {
    let a = ReducedThreeGraph::complete(&[1, 2, 3], 2).unwrap();
    assert!(embeds(&a, &build(&Named::K4Minus).unwrap()).unwrap().is_none());
    assert!(embeds(&a, &build(&Named::SingleEdge).unwrap()).unwrap().is_some());
}
