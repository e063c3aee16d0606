//! Decides every palette property for one graph and checks each certificate.
//!
//! Usage: `check_property [GRAPH]`, where GRAPH is `name:<catalog entry>` or
//! a path to a graph JSON file (default `name:f7star_hat`).

use turan_core::catalog::resolve;
use turan_core::palette::{solve_with, PropertyKind, SolveOptions, SolveOutcome};

fn main() -> turan_core::Result<()> {
    let reference = std::env::args().nth(1).unwrap_or_else(|| "name:f7star_hat".into());
    let graph = resolve(&reference)?;
    println!("{reference}: {} vertices, {} edges", graph.n(), graph.edge_count());
    for kind in PropertyKind::ALL {
        let report = solve_with(&graph, kind, &SolveOptions::default())?;
        match &report.outcome {
            SolveOutcome::Sat(cert) => {
                let verdict = cert.verify(&graph)?;
                println!(
                    "{:<12} SAT   ordering {:?} istar {:?}, verifier {}",
                    kind.name(),
                    cert.ordering.order(),
                    cert.istar,
                    if verdict.is_accept() { "accepts" } else { "REJECTS" }
                );
            }
            SolveOutcome::Unsat => println!("{:<12} UNSAT after {} nodes", kind.name(), report.nodes),
            SolveOutcome::Timeout => println!("{:<12} timed out", kind.name()),
        }
    }
    Ok(())
}
