//! Projection graphs of a constituent and the statistics built on them.
//!
//! For `i < j < k`, the bipartite graph `Q^i_jk` joins `u` in `P_ij` to `v` in
//! `P_ik` when at least `eps^2 |P_jk|` right vertices `w` make `(u, w, v)` an
//! edge of `A_ijk`.

use serde::Serialize;

use super::ReducedThreeGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QGraph {
    pub triple: [usize; 3],
    /// `|P_ij|`.
    pub left_size: usize,
    /// `|P_ik|`.
    pub top_size: usize,
    /// For each top vertex `v`, its neighbours in `P_ij`, increasing.
    pub neighbours: Vec<Vec<usize>>,
}

impl QGraph {
    pub fn degree(&self, top: usize) -> usize {
        self.neighbours[top].len()
    }

    pub fn has_edge(&self, left: usize, top: usize) -> bool {
        self.neighbours[top].binary_search(&left).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(Vec::len).sum()
    }
}

fn check_args(a: &ReducedThreeGraph, [i, j, k]: [usize; 3], eps: f64) -> Result<()> {
    let member = |x: usize| a.indices().binary_search(&x).is_ok();
    if !(i < j && j < k && member(i) && member(j) && member(k)) {
        return Err(Error::InvalidArgument(format!(
            "{i},{j},{k} is not an increasing triple of indices"
        )));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidArgument(format!("eps must lie in (0, 1], got {eps}")));
    }
    Ok(())
}

pub fn project_q(a: &ReducedThreeGraph, i: usize, j: usize, k: usize, eps: f64) -> Result<QGraph> {
    check_args(a, [i, j, k], eps)?;
    let (left_size, right_size, top_size) = (a.class_size(i, j), a.class_size(j, k), a.class_size(i, k));
    let mut counts = vec![vec![0usize; left_size]; top_size];
    for [l, _, t] in a.constituent(i, j, k) {
        counts[t][l] += 1;
    }
    let threshold = eps * eps * right_size as f64;
    let neighbours = counts
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(_, &c)| c as f64 >= threshold)
                .map(|(l, _)| l)
                .collect()
        })
        .collect();
    Ok(QGraph {
        triple: [i, j, k],
        left_size,
        top_size,
        neighbours,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeSquareStat {
    /// `sum over v in P_ik of deg(v)^2`.
    pub sum: u64,
    /// `(1/4 + eps/2) |P_ij|^2 |P_ik|`.
    pub threshold: f64,
    pub holds: bool,
}

/// Compares the degree-square sum of `q` with `(1/4 + eps/2) |P_ij|^2 |P_ik|`.
pub fn degree_square_stat(q: &QGraph, eps: f64) -> DegreeSquareStat {
    let sum = (0..q.top_size).map(|v| (q.degree(v) as u64).pow(2)).sum();
    let threshold = (0.25 + eps / 2.0) * (q.left_size as f64).powi(2) * q.top_size as f64;
    DegreeSquareStat {
        sum,
        threshold,
        holds: sum as f64 >= threshold,
    }
}

/// Top vertices of `Q^i_jk` of degree at least `(1/2 + r eps^2) |P_ij|`.
pub fn s_set(a: &ReducedThreeGraph, i: usize, j: usize, k: usize, eps: f64, r: u32) -> Result<Vec<usize>> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let q = project_q(a, i, j, k, eps)?;
    let bound = (0.5 + r as f64 * eps * eps) * q.left_size as f64;
    Ok((0..q.top_size).filter(|&v| q.degree(v) as f64 >= bound).collect())
}
