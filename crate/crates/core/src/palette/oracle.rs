//! Brute-force decision procedure, kept deliberately naive and independent of
//! the solver: its own pattern predicate, no propagation, no symmetry
//! reduction, every vertex (isolated or not) permuted.
//!
//! For the two- and three-color kinds every coloring of the shadow is
//! enumerated. For the five- and six-color kinds that space is too large
//! (up to 6^10 per ordering), so every assignment of a pattern to each edge is
//! enumerated instead and the induced pair colors are checked for consistency.
//! Since each shadow pair lies in some edge and a pattern fixes the colors of
//! all three pairs of its edge, both enumerations range over the same set of
//! certificates.

use super::{split_range, Color, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::ThreeGraph;

pub const ORACLE_MAX_VERTICES: usize = 5;
pub const ORACLE_MAX_SHADOW: usize = 10;

pub fn oracle_solve(graph: &ThreeGraph, kind: PropertyKind) -> Result<bool> {
    if graph.n() > ORACLE_MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "oracle vertex count",
            limit: ORACLE_MAX_VERTICES,
            actual: graph.n(),
        });
    }
    let shadow: Vec<[usize; 2]> = graph.shadow().iter().collect();
    if shadow.len() > ORACLE_MAX_SHADOW {
        return Err(Error::GuardExceeded {
            what: "oracle shadow size",
            limit: ORACLE_MAX_SHADOW,
            actual: shadow.len(),
        });
    }
    let n = graph.n();
    let splits: Vec<Option<usize>> = match kind {
        PropertyKind::Spades | PropertyKind::SpadesStar => split_range(n).map(Some).collect(),
        _ => vec![None],
    };
    let pair_index = |u: usize, v: usize| {
        let key = if u < v { [u, v] } else { [v, u] };
        shadow.iter().position(|&p| p == key).unwrap()
    };
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mut position = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p + 1;
        }
        // each edge as (positions, pair slots) in ordering direction
        let edges: Vec<([usize; 3], [usize; 3])> = graph
            .edges()
            .iter()
            .map(|e| {
                let mut t = *e;
                t.sort_by_key(|&v| position[v]);
                let [x, y, z] = t;
                (
                    [position[x], position[y], position[z]],
                    [pair_index(x, y), pair_index(y, z), pair_index(x, z)],
                )
            })
            .collect();
        for &istar in &splits {
            let found = if matches!(kind, PropertyKind::Vanishing | PropertyKind::Clubs) {
                by_colorings(kind, &edges, shadow.len())
            } else {
                by_edge_patterns(kind, &edges, shadow.len(), istar)
            };
            if found {
                return Ok(true);
            }
        }
        if !next_permutation(&mut order) {
            return Ok(false);
        }
    }
}

/// The pattern class matched by an edge reading `colors` at `positions`.
fn classify_edge(
    kind: PropertyKind,
    colors: [Color; 3],
    positions: [usize; 3],
    istar: Option<usize>,
) -> Option<usize> {
    use Color::*;
    let [_, j, k] = positions;
    match kind {
        PropertyKind::Vanishing => (colors == [Red, Blue, Green]).then_some(0),
        PropertyKind::Clubs => match colors {
            [Red, Red, Blue] => Some(0),
            [Blue, Blue, Red] => Some(1),
            _ => None,
        },
        PropertyKind::FiveColor => match colors {
            [Blue, Violet, Red] => Some(0),
            [Green, Cyan, Blue] => Some(1),
            _ => None,
        },
        PropertyKind::Spades | PropertyKind::SpadesStar => {
            let s = istar.expect("split kinds carry istar");
            match colors {
                [Blue, Violet, Red] => Some(0),
                [Green, Cyan, Blue] if k <= s => Some(1),
                [Green, Black, Red] if j < s && s < k => Some(2),
                _ => None,
            }
        }
    }
}

fn by_colorings(kind: PropertyKind, edges: &[([usize; 3], [usize; 3])], pairs: usize) -> bool {
    let palette = kind.palette();
    let mut digits = vec![0usize; pairs];
    loop {
        let ok = edges.iter().all(|&(positions, slots)| {
            let colors = slots.map(|s| palette[digits[s]]);
            classify_edge(kind, colors, positions, None).is_some()
        });
        if ok {
            return true;
        }
        if !odometer(&mut digits, palette.len()) {
            return false;
        }
    }
}

fn by_edge_patterns(
    kind: PropertyKind,
    edges: &[([usize; 3], [usize; 3])],
    pairs: usize,
    istar: Option<usize>,
) -> bool {
    use Color::*;
    let tables: &[[Color; 3]] = match kind {
        PropertyKind::FiveColor => &[[Blue, Violet, Red], [Green, Cyan, Blue]],
        _ => &[[Blue, Violet, Red], [Green, Cyan, Blue], [Green, Black, Red]],
    };
    let mut choice = vec![0usize; edges.len()];
    loop {
        let mut coloring: Vec<Option<Color>> = vec![None; pairs];
        let mut used = [false; 3];
        let mut ok = true;
        for (e, &(positions, slots)) in edges.iter().enumerate() {
            let colors = tables[choice[e]];
            for s in 0..3 {
                match coloring[slots[s]] {
                    Some(c) if c != colors[s] => ok = false,
                    _ => coloring[slots[s]] = Some(colors[s]),
                }
            }
            match classify_edge(kind, colors, positions, istar) {
                Some(class) => used[class] = true,
                None => ok = false,
            }
        }
        if kind == PropertyKind::SpadesStar && !used.iter().all(|&u| u) {
            ok = false;
        }
        if ok {
            return true;
        }
        if !odometer(&mut choice, tables.len()) {
            return false;
        }
    }
}

/// Advances a mixed-radix counter; false after the last value.
fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let Some(i) = (0..items.len() - 1).rev().find(|&i| items[i] < items[i + 1]) else {
        return false;
    };
    let j = (i + 1..items.len()).rev().find(|&j| items[j] > items[i]).unwrap();
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}
