use proptest::prelude::*;

use turan_core::catalog::{build, Named};
use turan_core::construct::{
    construct_from, density_audit, generates_edge, random_construction, FixedColoring, PairColoring,
};
use turan_core::graph::pair;
use turan_core::palette::{Color, PropertyKind};

fn binomial3(n: usize) -> f64 {
    (n * n.saturating_sub(1) * n.saturating_sub(2)) as f64 / 6.0
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn edges_are_exactly_generating_triples(n in 0usize..=9, bits in any::<u64>()) {
        let mut coloring = FixedColoring { n, ..Default::default() };
        let mut bit = 0;
        for j in 0..n {
            for i in 0..j {
                let c = if bits >> (bit % 64) & 1 == 1 { Color::Blue } else { Color::Red };
                coloring.colors.insert(pair(i, j), c);
                bit += 1;
            }
        }
        let built = construct_from(coloring.clone());
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let read = [coloring.color(i, j), coloring.color(j, k), coloring.color(i, k)];
                    prop_assert_eq!(built.graph.has_edge(i, j, k), generates_edge(read));
                }
            }
        }
        let all: Vec<usize> = (0..n).collect();
        let cert = built.inherited_certificate(&all).unwrap();
        prop_assert!(cert.verify(&built.graph).unwrap().is_accept());
    }

    #[test]
    fn inherited_certificates_verify(seed in any::<u64>(), picks in proptest::sample::subsequence((0..60).collect::<Vec<usize>>(), 0..=12)) {
        let h = random_construction(60, seed);
        let cert = h.inherited_certificate(&picks).unwrap();
        prop_assert_eq!(cert.kind, PropertyKind::Clubs);
        prop_assert!(cert.verify(&h.graph.induced_sub(&picks)).unwrap().is_accept());
    }
}

#[test]
fn monochromatic_colorings_give_no_edges() {
    for color in [Color::Red, Color::Blue] {
        assert_eq!(construct_from(FixedColoring::monochromatic(8, color)).graph.edge_count(), 0);
    }
}

#[test]
fn construction_is_deterministic_in_the_seed() {
    assert_eq!(random_construction(40, 9).graph, random_construction(40, 9).graph);
    assert_ne!(random_construction(40, 9).graph, random_construction(40, 10).graph);
}

#[test]
fn edge_density_concentrates_near_a_quarter() {
    let densities: Vec<f64> = (0..20)
        .map(|seed| random_construction(100, seed).graph.edge_count() as f64 / binomial3(100))
        .collect();
    let mean = densities.iter().sum::<f64>() / densities.len() as f64;
    assert!(mean > 0.22 && mean < 0.28, "{mean}");
    assert!(densities.iter().all(|&d| d > 0.2 && d < 0.3), "{densities:?}");
}

#[test]
fn constructed_graphs_avoid_k4_minus() {
    let k4 = build(&Named::K4Minus).unwrap();
    let h = random_construction(30, 2);
    for a in 0..30 {
        for b in a + 1..30 {
            for c in b + 1..30 {
                for d in c + 1..30 {
                    let sub = h.graph.induced_sub(&[a, b, c, d]);
                    assert!(sub.edge_count() < 3, "{a}{b}{c}{d} spans {} edges of {}", sub.edge_count(), k4.edge_count());
                }
            }
        }
    }
}

#[test]
fn audit_uses_exact_enumeration_when_small() {
    let h = random_construction(12, 4);
    let audit = density_audit(&h.graph, 0.25, 0.01, &[3, 11], 5, 0).unwrap();
    assert!(audit.per_size.iter().all(|s| s.exact));
    assert_eq!(audit.per_size[0].tested, 220);
    assert_eq!(audit.per_size[1].tested, 12);
    // exact counts do not depend on the seed
    assert_eq!(audit, density_audit(&h.graph, 0.25, 0.01, &[3, 11], 5, 0).unwrap());
    let mut other = density_audit(&h.graph, 0.25, 0.01, &[3, 11], 5, 77).unwrap();
    other.seed = 0;
    assert_eq!(audit, other);
}

#[test]
fn audit_deficit_is_recomputed_independently() {
    let h = random_construction(60, 3);
    let (d, mu) = (0.25, 0.001);
    let audit = density_audit(&h.graph, d, mu, &[20], 40, 5).unwrap();
    let size = &audit.per_size[0];
    assert!(!size.exact);
    assert_eq!(size.tested, 40);
    let sub = h.graph.induced_sub(&size.worst_subset);
    let deficit = d * binomial3(20) - mu * 60f64.powi(3) - sub.edge_count() as f64;
    assert!((deficit - size.worst_deficit).abs() < 1e-9);
    assert_eq!(audit.pass, audit.worst_deficit <= 0.0);
}

#[test]
fn audit_rejects_bad_arguments() {
    let g = random_construction(10, 0).graph;
    assert!(density_audit(&g, 0.25, 0.0, &[3], 0, 0).is_err());
    assert!(density_audit(&g, 1.5, 0.0, &[3], 1, 0).is_err());
    assert!(density_audit(&g, 0.25, -1.0, &[3], 1, 0).is_err());
    assert!(density_audit(&g, 0.25, 0.0, &[11], 1, 0).is_err());
}
