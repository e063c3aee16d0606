//! Classifies the catalog graphs and prints the resulting density bounds.

use std::time::Instant;

use turan_core::catalog::{build, Named};
use turan_core::palette::{classify, MembershipStatus, PropertyKind};

fn main() -> turan_core::Result<()> {
    let graphs = [
        Named::K4Minus,
        Named::F5Star,
        Named::F6Star,
        Named::F7Star,
        Named::F7StarHat,
        Named::Wheel(3),
        Named::Wheel(4),
        Named::Wheel(5),
        Named::Wheel(6),
        Named::Wheel(7),
        Named::Wheel(8),
    ];
    println!(
        "{:<12} {:>3} {:>5}  {:<9} {:<6} {:<6} {:<6} {:<6}  {:<6} {:<6} ms",
        "graph", "n", "edges", "vanishing", "clubs", "spades", "star", "five", "lower", "upper"
    );
    for named in graphs {
        let graph = build(&named)?;
        let start = Instant::now();
        let report = classify(&graph)?;
        let mark = |k: PropertyKind| match report.status(k) {
            MembershipStatus::Sat => "sat",
            MembershipStatus::Unsat => "unsat",
            MembershipStatus::Skipped => "-",
        };
        println!(
            "{:<12} {:>3} {:>5}  {:<9} {:<6} {:<6} {:<6} {:<6}  {:<6} {:<6} {}",
            named.to_string(),
            graph.n(),
            graph.edge_count(),
            mark(PropertyKind::Vanishing),
            mark(PropertyKind::Clubs),
            mark(PropertyKind::Spades),
            mark(PropertyKind::SpadesStar),
            mark(PropertyKind::FiveColor),
            report.lower_bound.label(),
            report.upper_bound.label(),
            start.elapsed().as_millis(),
        );
    }
    Ok(())
}
