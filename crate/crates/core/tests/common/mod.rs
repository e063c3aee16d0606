//! Brute-force reference implementations shared by integration tests.

#![allow(dead_code)]

use turan_core::graph::{pair, Pair, ThreeGraph};
use turan_core::reduced::ReducedThreeGraph;

/// Advances `digits` through the mixed-radix range given by `radix`; false
/// once every combination has been produced.
pub fn odometer(digits: &mut [usize], radix: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radix).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every map `V(F) -> I` that is injective, and strictly increasing when
/// `increasing` holds.
fn index_maps(indices: &[usize], n: usize, increasing: bool) -> Vec<Vec<usize>> {
    let radix = vec![indices.len(); n];
    let mut digits = vec![0; n];
    let mut out = Vec::new();
    if indices.is_empty() && n > 0 {
        return out;
    }
    loop {
        let phi: Vec<usize> = digits.iter().map(|&d| indices[d]).collect();
        let ok = if increasing {
            phi.windows(2).all(|w| w[0] < w[1])
        } else {
            (0..n).all(|a| (a + 1..n).all(|b| phi[a] != phi[b]))
        };
        if ok {
            out.push(phi);
        }
        if !odometer(&mut digits, &radix) {
            return out;
        }
    }
}

/// Decides embedding by trying every `phi` and every `psi`.
pub fn embeds_brute(a: &ReducedThreeGraph, f: &ThreeGraph, increasing: bool) -> bool {
    if f.n() > a.indices().len() {
        return false;
    }
    let shadow: Vec<Pair> = f.shadow().iter().collect();
    index_maps(a.indices(), f.n(), increasing).into_iter().any(|phi| {
        let class = |[u, v]: Pair| {
            let (x, y) = (phi[u].min(phi[v]), phi[u].max(phi[v]));
            a.class_size(x, y)
        };
        let radix: Vec<usize> = shadow.iter().map(|&p| class(p)).collect();
        if radix.contains(&0) {
            return false;
        }
        let mut psi = vec![0; shadow.len()];
        loop {
            let at = |u: usize, v: usize| psi[shadow.iter().position(|&p| p == pair(u, v)).unwrap()];
            let all_edges = f.edges().iter().all(|&e| {
                let mut s = e;
                s.sort_by_key(|&v| phi[v]);
                let [p, q, r] = s;
                a.has_edge([phi[p], phi[q], phi[r]], [at(p, q), at(q, r), at(p, r)])
            });
            if all_edges {
                return true;
            }
            if !odometer(&mut psi, &radix) {
                return false;
            }
        }
    })
}

/// Neighbourhoods of the projection graph, recounted edge by edge.
pub fn q_neighbours(a: &ReducedThreeGraph, [i, j, k]: [usize; 3], eps: f64) -> Vec<Vec<usize>> {
    let (left, right, top) = (a.class_size(i, j), a.class_size(j, k), a.class_size(i, k));
    (0..top)
        .map(|t| {
            (0..left)
                .filter(|&l| {
                    let witnesses = (0..right).filter(|&r| a.has_edge([i, j, k], [l, r, t])).count();
                    witnesses as f64 >= eps * eps * right as f64
                })
                .collect()
        })
        .collect()
}

pub fn s_set_brute(a: &ReducedThreeGraph, triple: [usize; 3], eps: f64, r: u32) -> Vec<usize> {
    let left = a.class_size(triple[0], triple[1]) as f64;
    q_neighbours(a, triple, eps)
        .iter()
        .enumerate()
        .filter(|(_, n)| n.len() as f64 >= (0.5 + r as f64 * eps * eps) * left)
        .map(|(t, _)| t)
        .collect()
}

pub fn degree_square_brute(a: &ReducedThreeGraph, triple: [usize; 3], eps: f64) -> (u64, bool) {
    let q = q_neighbours(a, triple, eps);
    let sum: u64 = q.iter().map(|n| (n.len() * n.len()) as u64).sum();
    let left = a.class_size(triple[0], triple[1]) as f64;
    let bound = (0.25 + eps / 2.0) * left * left * q.len() as f64;
    (sum, sum as f64 >= bound)
}

/// Mirrors vertex labels: `v -> n - 1 - v`.
pub fn mirror(f: &ThreeGraph) -> ThreeGraph {
    let n = f.n();
    f.relabel(&(0..n).map(|v| n - 1 - v).collect::<Vec<_>>()).unwrap()
}
