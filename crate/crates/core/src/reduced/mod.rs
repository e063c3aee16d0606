//! Reduced 3-graphs: an index set `I`, a vertex class `P_ij` for each pair of
//! indices, and for each triple `i < j < k` a tripartite constituent `A_ijk`
//! whose edges take a left vertex from `P_ij`, a right vertex from `P_jk` and
//! a top vertex from `P_ik`.
//!
//! Vertices are addressed by class and local index `0..|P_ij|`, so classes
//! are disjoint by construction.

mod embed;
mod projection;

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use embed::{embeds, embeds_with, EmbedMode, EmbeddingWitness, PsiEntry, MAX_CLASS_SIZE, MAX_INDICES};
pub use projection::{degree_square_stat, project_q, s_set, DegreeSquareStat, QGraph};

/// `(left, right, top)` local indices of a constituent edge.
pub type ConstituentEdge = [usize; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ReducedJson", into = "ReducedJson")]
pub struct ReducedThreeGraph {
    indices: Vec<usize>,
    class_sizes: BTreeMap<[usize; 2], usize>,
    constituents: BTreeMap<[usize; 3], BTreeSet<ConstituentEdge>>,
}

impl ReducedThreeGraph {
    /// A reduced 3-graph with no constituent edges and every class of size
    /// `class_size`.
    pub fn empty(indices: &[usize], class_size: usize) -> Result<Self> {
        let indices = normalize_indices(indices)?;
        let class_sizes = index_pairs(&indices).map(|p| (p, class_size)).collect();
        Ok(ReducedThreeGraph {
            indices,
            class_sizes,
            constituents: BTreeMap::new(),
        })
    }

    /// Builds and validates a reduced 3-graph. Every pair of indices needs a
    /// class size; constituents may be omitted when empty.
    pub fn new(
        indices: &[usize],
        class_sizes: BTreeMap<[usize; 2], usize>,
        constituents: BTreeMap<[usize; 3], BTreeSet<ConstituentEdge>>,
    ) -> Result<Self> {
        let indices = normalize_indices(indices)?;
        let expected: BTreeSet<[usize; 2]> = index_pairs(&indices).collect();
        let given: BTreeSet<[usize; 2]> = class_sizes.keys().copied().collect();
        if expected != given {
            return Err(Error::Reduced(
                "class sizes must be given for exactly the pairs of indices".into(),
            ));
        }
        let a = ReducedThreeGraph {
            indices,
            class_sizes,
            constituents: BTreeMap::new(),
        };
        let mut a = a;
        for (triple, edges) in constituents {
            if edges.is_empty() {
                continue;
            }
            a.check_triple(triple)?;
            for &edge in &edges {
                a.check_edge(triple, edge)?;
            }
            a.constituents.insert(triple, edges);
        }
        Ok(a)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Size of `P_ij`; zero for pairs outside the index set.
    pub fn class_size(&self, i: usize, j: usize) -> usize {
        let key = if i < j { [i, j] } else { [j, i] };
        self.class_sizes.get(&key).copied().unwrap_or(0)
    }

    pub fn class_sizes(&self) -> &BTreeMap<[usize; 2], usize> {
        &self.class_sizes
    }

    /// The edges of `A_ijk`, `i < j < k`.
    pub fn constituent(&self, i: usize, j: usize, k: usize) -> impl Iterator<Item = ConstituentEdge> + '_ {
        self.constituents.get(&[i, j, k]).into_iter().flatten().copied()
    }

    pub fn constituent_len(&self, i: usize, j: usize, k: usize) -> usize {
        self.constituents.get(&[i, j, k]).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, triple: [usize; 3], edge: ConstituentEdge) -> bool {
        self.constituents
            .get(&triple)
            .is_some_and(|set| set.contains(&edge))
    }

    /// All triples `i < j < k` of the index set.
    pub fn triples(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let idx = &self.indices;
        (0..idx.len()).flat_map(move |a| {
            (a + 1..idx.len()).flat_map(move |b| (b + 1..idx.len()).map(move |c| [idx[a], idx[b], idx[c]]))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.constituents.values().map(BTreeSet::len).sum()
    }

    /// Adds an edge; returns whether it was new.
    pub fn insert_edge(&mut self, triple: [usize; 3], edge: ConstituentEdge) -> Result<bool> {
        self.check_triple(triple)?;
        self.check_edge(triple, edge)?;
        Ok(self.constituents.entry(triple).or_default().insert(edge))
    }

    /// Removes an edge; returns whether it was present.
    pub fn remove_edge(&mut self, triple: [usize; 3], edge: ConstituentEdge) -> bool {
        let Some(set) = self.constituents.get_mut(&triple) else {
            return false;
        };
        let removed = set.remove(&edge);
        if set.is_empty() {
            self.constituents.remove(&triple);
        }
        removed
    }

    /// Fills every constituent with all possible edges.
    pub fn complete(indices: &[usize], class_size: usize) -> Result<Self> {
        let mut a = Self::empty(indices, class_size)?;
        let triples: Vec<[usize; 3]> = a.triples().collect();
        for t in triples {
            let edges = all_edges(class_size, class_size, class_size).collect();
            a.constituents.insert(t, edges);
        }
        a.constituents.retain(|_, s| !s.is_empty());
        Ok(a)
    }

    /// The reverse: with `I = x_1 < ... < x_n`, the class `P'_{x_i x_j}` is
    /// `P_{x_{n-j+1} x_{n-i+1}}`, so left and right vertices trade roles and
    /// top vertices stay top.
    pub fn reverse(&self) -> ReducedThreeGraph {
        let n = self.indices.len();
        let pos: BTreeMap<usize, usize> = self.indices.iter().enumerate().map(|(p, &x)| (x, p)).collect();
        let mirror = |x: usize| self.indices[n - 1 - pos[&x]];
        let class_sizes = self
            .class_sizes
            .keys()
            .map(|&[i, j]| ([i, j], self.class_size(mirror(j), mirror(i))))
            .collect();
        let constituents = self
            .constituents
            .iter()
            .map(|(&[i, j, k], edges)| {
                let reversed = edges.iter().map(|&[l, r, t]| [r, l, t]).collect();
                ([mirror(k), mirror(j), mirror(i)], reversed)
            })
            .collect();
        ReducedThreeGraph {
            indices: self.indices.clone(),
            class_sizes,
            constituents,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reduced 3-graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn check_triple(&self, [i, j, k]: [usize; 3]) -> Result<()> {
        let member = |x: usize| self.indices.binary_search(&x).is_ok();
        if !(i < j && j < k && member(i) && member(j) && member(k)) {
            return Err(Error::Reduced(format!(
                "constituent {i},{j},{k} is not an increasing triple of indices"
            )));
        }
        Ok(())
    }

    fn check_edge(&self, [i, j, k]: [usize; 3], [l, r, t]: ConstituentEdge) -> Result<()> {
        if l >= self.class_size(i, j) || r >= self.class_size(j, k) || t >= self.class_size(i, k) {
            return Err(Error::Reduced(format!(
                "edge [{l},{r},{t}] of constituent {i},{j},{k} leaves its classes"
            )));
        }
        Ok(())
    }
}

fn normalize_indices(indices: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != indices.len() {
        return Err(Error::Reduced("index set repeats an index".into()));
    }
    Ok(sorted)
}

fn index_pairs(indices: &[usize]) -> impl Iterator<Item = [usize; 2]> + '_ {
    (0..indices.len()).flat_map(move |a| (a + 1..indices.len()).map(move |b| [indices[a], indices[b]]))
}

fn all_edges(left: usize, right: usize, top: usize) -> impl Iterator<Item = ConstituentEdge> {
    (0..left).flat_map(move |l| (0..right).flat_map(move |r| (0..top).map(move |t| [l, r, t])))
}

/// The outcome of [`is_d_dense`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityCheck {
    pub dense: bool,
    /// The constituent of least relative density and that density; `None`
    /// when there are fewer than three indices.
    pub worst: Option<([usize; 3], f64)>,
}

/// Whether `|A_ijk| >= d |P_ij| |P_jk| |P_ik|` for every triple.
pub fn is_d_dense(a: &ReducedThreeGraph, d: f64) -> Result<DensityCheck> {
    let mut worst: Option<([usize; 3], f64)> = None;
    let mut dense = true;
    for [i, j, k] in a.triples() {
        let sizes = [(i, j), (j, k), (i, k)];
        if let Some(&(x, y)) = sizes.iter().find(|&&(x, y)| a.class_size(x, y) == 0) {
            return Err(Error::EmptyClass { pair: (x, y) });
        }
        let volume = sizes.iter().map(|&(x, y)| a.class_size(x, y)).product::<usize>();
        let edges = a.constituent_len(i, j, k);
        if (edges as f64) < d * volume as f64 {
            dense = false;
        }
        let density = edges as f64 / volume as f64;
        if worst.is_none_or(|(_, w)| density < w) {
            worst = Some(([i, j, k], density));
        }
    }
    Ok(DensityCheck { dense, worst })
}

/// Indices `1..=index_count`, classes of size `class_size`, and each possible
/// constituent edge present independently with probability `edge_prob`.
pub fn random_reduced(index_count: usize, class_size: usize, edge_prob: f64, seed: u64) -> Result<ReducedThreeGraph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidArgument(format!(
            "edge probability must lie in [0, 1], got {edge_prob}"
        )));
    }
    if index_count > MAX_INDICES {
        return Err(Error::GuardExceeded {
            what: "index count",
            limit: MAX_INDICES,
            actual: index_count,
        });
    }
    if class_size > MAX_CLASS_SIZE {
        return Err(Error::GuardExceeded {
            what: "class size",
            limit: MAX_CLASS_SIZE,
            actual: class_size,
        });
    }
    let indices: Vec<usize> = (1..=index_count).collect();
    let mut a = ReducedThreeGraph::empty(&indices, class_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[usize; 3]> = a.triples().collect();
    for triple in triples {
        let edges: BTreeSet<ConstituentEdge> = all_edges(class_size, class_size, class_size)
            .filter(|_| rng.gen_bool(edge_prob))
            .collect();
        if !edges.is_empty() {
            a.constituents.insert(triple, edges);
        }
    }
    Ok(a)
}

#[derive(Serialize, Deserialize)]
struct ReducedJson {
    indices: Vec<usize>,
    class_sizes: BTreeMap<String, usize>,
    #[serde(default)]
    constituents: BTreeMap<String, Vec<ConstituentEdge>>,
}

fn parse_key<const N: usize>(key: &str) -> Result<[usize; N]> {
    let parts: Vec<usize> = key
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Reduced(format!("malformed key `{key}`")))?;
    parts
        .try_into()
        .map_err(|_| Error::Reduced(format!("key `{key}` should list {N} indices")))
}

fn format_key(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl TryFrom<ReducedJson> for ReducedThreeGraph {
    type Error = Error;

    fn try_from(raw: ReducedJson) -> Result<Self> {
        let class_sizes = raw
            .class_sizes
            .iter()
            .map(|(k, &s)| Ok((parse_key::<2>(k)?, s)))
            .collect::<Result<_>>()?;
        let mut constituents = BTreeMap::new();
        for (k, edges) in &raw.constituents {
            let set: BTreeSet<ConstituentEdge> = edges.iter().copied().collect();
            if set.len() != edges.len() {
                return Err(Error::Reduced(format!("constituent {k} repeats an edge")));
            }
            constituents.insert(parse_key::<3>(k)?, set);
        }
        ReducedThreeGraph::new(&raw.indices, class_sizes, constituents)
    }
}

impl From<ReducedThreeGraph> for ReducedJson {
    fn from(a: ReducedThreeGraph) -> Self {
        ReducedJson {
            indices: a.indices,
            class_sizes: a.class_sizes.iter().map(|(k, &s)| (format_key(k), s)).collect(),
            constituents: a
                .constituents
                .iter()
                .map(|(k, e)| (format_key(k), e.iter().copied().collect()))
                .collect(),
        }
    }
}
