use proptest::prelude::*;
use proptest::sample::subsequence;

use turan_core::catalog::{build, Named};
use turan_core::graph::ThreeGraph;
use turan_core::palette::{solve, Color, PaletteCertificate, PropertyKind, SolveOutcome};

fn all_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Graphs on at most `max_n` vertices with arbitrary edge sets.
fn graphs(max_n: usize) -> impl Strategy<Value = ThreeGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let triples = all_triples(n);
        let len = triples.len();
        subsequence(triples, 0..=len).prop_map(move |edges| ThreeGraph::new(n, edges).unwrap())
    })
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (ThreeGraph, Vec<usize>)> {
    graphs(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn sat(g: &ThreeGraph, kind: PropertyKind) -> Option<PaletteCertificate> {
    match solve(g, kind).unwrap() {
        SolveOutcome::Sat(c) => {
            assert!(c.verify(g).unwrap().is_accept(), "solver emitted a rejected {kind} certificate");
            Some(c)
        }
        SolveOutcome::Unsat => None,
        SolveOutcome::Timeout => panic!("unexpected timeout"),
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn status_invariant_under_relabeling((g, perm) in graph_and_permutation(6)) {
        let h = g.relabel(&perm).unwrap();
        for kind in PropertyKind::ALL {
            prop_assert_eq!(sat(&g, kind).is_some(), sat(&h, kind).is_some(), "{}", kind);
        }
    }

    #[test]
    fn clubs_certificates_survive_color_swap(g in graphs(6)) {
        if let Some(cert) = sat(&g, PropertyKind::Clubs) {
            let swapped = cert.recolor(PropertyKind::Clubs, None, |c| match c {
                Color::Red => Color::Blue,
                _ => Color::Red,
            });
            prop_assert!(swapped.verify(&g).unwrap().is_accept());
        }
    }

    #[test]
    fn accepted_certificates_restrict_to_induced_subgraphs(g in graphs(6)) {
        for kind in [PropertyKind::Vanishing, PropertyKind::Clubs, PropertyKind::FiveColor, PropertyKind::Spades] {
            let Some(cert) = sat(&g, kind) else { continue };
            let split_vertex = cert.istar.filter(|_| g.n() > 0).map(|s| cert.ordering.vertex_at(s - 1));
            for subset in subsets(g.n()) {
                let sub = g.induced_sub(&subset);
                if split_vertex.is_none_or(|v| subset.contains(&v)) {
                    let restricted = cert.restrict(&g, &subset);
                    prop_assert!(restricted.verify(&sub).unwrap().is_accept(), "{} on {:?}", kind, subset);
                } else {
                    // the certificate may break, but membership survives
                    prop_assert!(sat(&sub, kind).is_some(), "{} status on {:?}", kind, subset);
                }
            }
        }
    }

    #[test]
    fn vanishing_certificates_become_spades_certificates(g in graphs(6)) {
        if let Some(cert) = sat(&g, PropertyKind::Vanishing) {
            let spades = cert.recolor(PropertyKind::Spades, Some(g.n().max(1)), |c| match c {
                Color::Red => Color::Green,
                Color::Blue => Color::Cyan,
                _ => Color::Blue,
            });
            prop_assert!(spades.verify(&g).unwrap().is_accept());
            prop_assert!(sat(&g, PropertyKind::Spades).is_some());
        }
    }

    #[test]
    fn lifted_certificates_verify_on_blow_ups(g in graphs(4)) {
        for kind in [PropertyKind::Vanishing, PropertyKind::Clubs, PropertyKind::Spades, PropertyKind::FiveColor] {
            if let Some(cert) = sat(&g, kind) {
                let lifted = cert.lift_to_blow_up(&g, 2).unwrap();
                prop_assert!(lifted.verify(&g.blow_up(2).unwrap()).unwrap().is_accept(), "{}", kind);
            }
        }
    }
}

#[test]
fn spades_certificate_breaks_without_split_vertex() {
    // positions 1..4, {1,2,3} within the split and {1,2,4} straddling it
    let g = ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
    let cert = PaletteCertificate::from_json(
        r#"{"kind":"spades","ordering":[0,1,2,3],"istar":3,"coloring":[
            {"pair":[0,1],"color":"green"},{"pair":[1,2],"color":"cyan"},
            {"pair":[0,2],"color":"blue"},{"pair":[1,3],"color":"black"},
            {"pair":[0,3],"color":"red"}]}"#,
    )
    .unwrap();
    assert!(cert.verify(&g).unwrap().is_accept());
    let without_split = cert.restrict(&g, &[0, 1, 3]);
    assert!(!without_split.verify(&g.induced_sub(&[0, 1, 3])).unwrap().is_accept());
    assert!(sat(&g.induced_sub(&[0, 1, 3]), PropertyKind::Spades).is_some());
}

#[test]
fn blow_up_lifting_on_named_graphs() {
    for named in [Named::SingleEdge, Named::Wheel(5), Named::F5Star] {
        let g = build(&named).unwrap();
        let blown = g.blow_up(2).unwrap();
        for kind in [PropertyKind::Vanishing, PropertyKind::Clubs, PropertyKind::Spades, PropertyKind::FiveColor] {
            if let Some(cert) = sat(&g, kind) {
                let lifted = cert.lift_to_blow_up(&g, 2).unwrap();
                assert!(lifted.verify(&blown).unwrap().is_accept(), "{named} {kind}");
                assert!(sat(&blown, kind).is_some(), "{named} {kind} after blow-up");
            }
        }
    }
}
