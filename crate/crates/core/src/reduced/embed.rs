use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::ReducedThreeGraph;
use crate::error::{Error, Result};
use crate::graph::{Pair, ThreeGraph};

pub const MAX_INDICES: usize = 8;
pub const MAX_CLASS_SIZE: usize = 16;

/// Which index maps `phi` the search ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbedMode {
    /// `phi` strictly increasing in the vertex labels of `F`.
    #[default]
    OrderRespecting,
    /// Any injective `phi`, which amounts to trying every ordering of `F`.
    Injective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiEntry {
    pub pair: Pair,
    /// The class `[phi(u), phi(v)]` sorted increasingly.
    pub class: [usize; 2],
    /// Local index inside the class.
    pub vertex: usize,
}

/// Maps `phi: V(F) -> I` and `psi: shadow(F) -> V(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingWitness {
    pub phi: Vec<usize>,
    /// One entry per shadow pair, in increasing pair order.
    pub psi: Vec<PsiEntry>,
}

impl EmbeddingWitness {
    /// Checks the three defining conditions directly; `Err` names the first
    /// one that fails.
    pub fn check(&self, a: &ReducedThreeGraph, f: &ThreeGraph) -> std::result::Result<(), String> {
        if self.phi.len() != f.n() {
            return Err(format!("phi has {} entries for {} vertices", self.phi.len(), f.n()));
        }
        if let Some(&x) = self.phi.iter().find(|&&x| a.indices().binary_search(&x).is_err()) {
            return Err(format!("phi uses {x}, which is not an index"));
        }
        let shadow: Vec<Pair> = f.shadow().iter().collect();
        let domain: Vec<Pair> = self.psi.iter().map(|e| e.pair).collect();
        if domain != shadow {
            return Err("psi is not defined exactly on the shadow".into());
        }
        let mut value = std::collections::BTreeMap::new();
        for e in &self.psi {
            let [u, v] = e.pair;
            let (x, y) = (self.phi[u], self.phi[v]);
            if x == y {
                return Err(format!("phi sends both ends of {u}{v} to index {x}"));
            }
            let class = if x < y { [x, y] } else { [y, x] };
            if e.class != class || e.vertex >= a.class_size(class[0], class[1]) {
                return Err(format!("psi({u},{v}) is not in P_{}{}", class[0], class[1]));
            }
            value.insert(e.pair, e.vertex);
        }
        for &edge in f.edges() {
            let mut sorted = edge;
            sorted.sort_by_key(|&v| self.phi[v]);
            let [p, q, r] = sorted;
            let at = |u: usize, v: usize| value[&crate::graph::pair(u, v)];
            let image = [at(p, q), at(q, r), at(p, r)];
            let triple = [self.phi[p], self.phi[q], self.phi[r]];
            if !a.has_edge(triple, image) {
                return Err(format!("edge {edge:?} maps to a non-edge of A_{triple:?}"));
            }
        }
        Ok(())
    }
}

/// [`embeds_with`] in [`EmbedMode::OrderRespecting`].
pub fn embeds(a: &ReducedThreeGraph, f: &ThreeGraph) -> Result<Option<EmbeddingWitness>> {
    embeds_with(a, f, EmbedMode::OrderRespecting)
}

/// Searches for a witness that `a` embeds `f`. The result is the witness with
/// lexicographically least `phi`, then least `psi` in shadow-pair order.
pub fn embeds_with(a: &ReducedThreeGraph, f: &ThreeGraph, mode: EmbedMode) -> Result<Option<EmbeddingWitness>> {
    let indices = a.indices();
    if indices.len() > MAX_INDICES {
        return Err(Error::GuardExceeded {
            what: "index count",
            limit: MAX_INDICES,
            actual: indices.len(),
        });
    }
    if let Some(&size) = a.class_sizes().values().find(|&&s| s > MAX_CLASS_SIZE) {
        return Err(Error::GuardExceeded {
            what: "class size",
            limit: MAX_CLASS_SIZE,
            actual: size,
        });
    }
    if f.n() > indices.len() {
        return Ok(None);
    }
    let shadow: Vec<Pair> = f.shadow().iter().collect();
    let slot = |u: usize, v: usize| shadow.binary_search(&crate::graph::pair(u, v)).unwrap();
    let edge_slots: Vec<[usize; 3]> = f
        .edges()
        .iter()
        .map(|&[x, y, z]| [slot(x, y), slot(y, z), slot(x, z)])
        .collect();
    let candidates = phi_candidates(indices, f.n(), mode);
    let found = candidates.par_iter().find_map_first(|phi| {
        let search = PsiSearch::new(a, f, &shadow, &edge_slots, phi)?;
        search.run().map(|psi| (phi.clone(), psi))
    });
    let Some((phi, values)) = found else {
        return Ok(None);
    };
    let psi = shadow
        .iter()
        .zip(values)
        .map(|(&[u, v], vertex)| {
            let (x, y) = (phi[u], phi[v]);
            PsiEntry {
                pair: [u, v],
                class: if x < y { [x, y] } else { [y, x] },
                vertex,
            }
        })
        .collect();
    let witness = EmbeddingWitness { phi, psi };
    witness
        .check(a, f)
        .map_err(|e| Error::Reduced(format!("search produced an invalid witness: {e}")))?;
    Ok(Some(witness))
}

/// Candidate maps in lexicographic order.
fn phi_candidates(indices: &[usize], f: usize, mode: EmbedMode) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(f);
    let mut used = vec![false; indices.len()];
    fn rec(
        indices: &[usize],
        f: usize,
        mode: EmbedMode,
        current: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == f {
            out.push(current.clone());
            return;
        }
        for (p, &x) in indices.iter().enumerate() {
            let allowed = match mode {
                EmbedMode::OrderRespecting => current.last().is_none_or(|&last| x > last),
                EmbedMode::Injective => !used[p],
            };
            if allowed {
                used[p] = true;
                current.push(x);
                rec(indices, f, mode, current, used, out);
                current.pop();
                used[p] = false;
            }
        }
    }
    rec(indices, f, mode, &mut current, &mut used, &mut out);
    out
}

/// Backtracking over `psi` for one fixed `phi`.
struct PsiSearch<'a> {
    a: &'a ReducedThreeGraph,
    /// Candidate local indices per shadow pair, increasing.
    domains: Vec<Vec<usize>>,
    /// Per edge: constituent key and the slots of its left, right, top pairs.
    edges: Vec<([usize; 3], [usize; 3])>,
    /// Edges to check once slot `s` is assigned (its largest slot is `s`).
    closing: Vec<Vec<usize>>,
}

impl<'a> PsiSearch<'a> {
    fn new(
        a: &'a ReducedThreeGraph,
        f: &ThreeGraph,
        shadow: &[Pair],
        edge_slots: &[[usize; 3]],
        phi: &[usize],
    ) -> Option<Self> {
        let mut edges = Vec::with_capacity(f.edge_count());
        for (e, &[x, y, z]) in f.edges().iter().enumerate() {
            let [sxy, syz, sxz] = edge_slots[e];
            // roles follow the order of the images under phi
            let mut verts = [(phi[x], x), (phi[y], y), (phi[z], z)];
            verts.sort_unstable();
            let [(i, p), (j, q), (k, r)] = verts;
            let slot_of = |u: usize, v: usize| {
                let key = crate::graph::pair(u, v);
                if key == crate::graph::pair(x, y) {
                    sxy
                } else if key == crate::graph::pair(y, z) {
                    syz
                } else {
                    sxz
                }
            };
            edges.push(([i, j, k], [slot_of(p, q), slot_of(q, r), slot_of(p, r)]));
        }
        let mut domains: Vec<Vec<usize>> = shadow
            .iter()
            .map(|&[u, v]| (0..a.class_size(phi[u], phi[v])).collect())
            .collect();
        for (triple, slots) in &edges {
            let mut seen: [BTreeSet<usize>; 3] = Default::default();
            for edge in a.constituent(triple[0], triple[1], triple[2]) {
                for role in 0..3 {
                    seen[role].insert(edge[role]);
                }
            }
            for role in 0..3 {
                domains[slots[role]].retain(|v| seen[role].contains(v));
            }
        }
        if domains.iter().any(Vec::is_empty) {
            return None;
        }
        let mut closing = vec![Vec::new(); shadow.len()];
        for (e, (_, slots)) in edges.iter().enumerate() {
            closing[*slots.iter().max().unwrap()].push(e);
        }
        Some(PsiSearch {
            a,
            domains,
            edges,
            closing,
        })
    }

    fn run(&self) -> Option<Vec<usize>> {
        let mut values = vec![usize::MAX; self.domains.len()];
        self.extend(0, &mut values).then_some(values)
    }

    fn extend(&self, slot: usize, values: &mut [usize]) -> bool {
        if slot == values.len() {
            return true;
        }
        for &v in &self.domains[slot] {
            values[slot] = v;
            let consistent = self.closing[slot].iter().all(|&e| {
                let (triple, s) = &self.edges[e];
                self.a.has_edge(*triple, s.map(|x| values[x]))
            });
            if consistent && self.extend(slot + 1, values) {
                return true;
            }
        }
        values[slot] = usize::MAX;
        false
    }
}
