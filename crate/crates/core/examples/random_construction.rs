//! Builds the random red/blue construction, audits its density, and checks
//! that its small induced subgraphs carry CLUBS certificates and avoid K4-.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use turan_core::catalog::{build, Named};
use turan_core::construct::{density_audit, random_construction};
use turan_core::subgraph::contains_sub;

fn main() -> turan_core::Result<()> {
    let (n, seed) = (200, 2024);
    let h = random_construction(n, seed);
    let triples = (n * (n - 1) * (n - 2) / 6) as f64;
    println!(
        "H({n}) with seed {seed}: {} edges, density {:.4}",
        h.graph.edge_count(),
        h.graph.edge_count() as f64 / triples
    );

    let audit = density_audit(&h.graph, 0.25, 0.05, &[50, 100, 150], 200, seed)?;
    for s in &audit.per_size {
        println!(
            "  |U| = {:>3}: {} subsets, lowest density {:.4}, worst deficit {:.1}",
            s.size,
            s.tested,
            s.min_density.unwrap_or(f64::NAN),
            s.worst_deficit
        );
    }
    println!("  audit at d = 1/4, mu = 0.05: {}", if audit.pass { "pass" } else { "fail" });
    let tight = density_audit(&h.graph, 0.25, 0.0, &[50, 100, 150], 200, seed)?;
    println!("  same audit with mu = 0: worst deficit {:.1}", tight.worst_deficit);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k4m = build(&Named::K4Minus)?;
    let (mut accepted, mut k4_free) = (0, 0);
    for size in 3..=10 {
        for _ in 0..10 {
            let subset = sample(&mut rng, n, size).into_vec();
            let cert = h.inherited_certificate(&subset)?;
            let sub = h.graph.induced_sub(&subset);
            accepted += cert.verify(&sub)?.is_accept() as usize;
            k4_free += contains_sub(&sub, &k4m)?.is_none() as usize;
        }
    }
    println!("inherited CLUBS certificates accepted: {accepted}/80, K4- free samples: {k4_free}/80");
    Ok(())
}
