use proptest::prelude::*;
use proptest::sample::subsequence;

use turan_core::catalog::{build, Named};
use turan_core::graph::ThreeGraph;
use turan_core::palette::{oracle_solve, solve, PropertyKind, ORACLE_MAX_SHADOW, ORACLE_MAX_VERTICES};

fn five_vertex_triples() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn agree(g: &ThreeGraph, kind: PropertyKind) -> Result<(), TestCaseError> {
    let outcome = solve(g, kind).unwrap();
    if let Some(cert) = outcome.certificate() {
        prop_assert!(cert.verify(g).unwrap().is_accept());
    }
    prop_assert_eq!(outcome.is_sat(), oracle_solve(g, kind).unwrap(), "{} on {:?}", kind, g.edges());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn solver_matches_oracle(
        n in 0usize..=5,
        edges in subsequence(five_vertex_triples(), 0..=10),
    ) {
        let edges: Vec<[usize; 3]> = edges.into_iter().filter(|e| e[2] < n).collect();
        let g = ThreeGraph::new(n, edges).unwrap();
        for kind in PropertyKind::ALL {
            agree(&g, kind)?;
        }
    }
}

#[test]
fn catalog_graphs_within_oracle_guard() {
    let mut checked = 0;
    for named in Named::examples() {
        let g = build(&named).unwrap();
        if g.n() > ORACLE_MAX_VERTICES || g.shadow().len() > ORACLE_MAX_SHADOW {
            continue;
        }
        for kind in PropertyKind::ALL {
            agree(&g, kind).unwrap();
        }
        checked += 1;
    }
    assert!(checked >= 6, "only {checked} catalog graphs fit the oracle");
}

#[test]
fn oracle_reference_answers() {
    let k4m = build(&Named::K4Minus).unwrap();
    assert!(!oracle_solve(&k4m, PropertyKind::Clubs).unwrap());
    assert!(oracle_solve(&build(&Named::SingleEdge).unwrap(), PropertyKind::Clubs).unwrap());
    assert!(!oracle_solve(&ThreeGraph::edgeless(4), PropertyKind::SpadesStar).unwrap());
    assert!(oracle_solve(&build(&Named::Wheel(5)).unwrap(), PropertyKind::Vanishing).unwrap());
}
