//! Small 3-uniform hypergraphs on the dense vertex set `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex pair stored with the smaller endpoint first.
pub type Pair = [usize; 2];

/// An edge stored as a strictly increasing triple.
pub type Triple = [usize; 3];

pub fn pair(u: usize, v: usize) -> Pair {
    if u < v {
        [u, v]
    } else {
        [v, u]
    }
}

/// A 3-graph with vertices `0..n` and a canonical (sorted, duplicate-free)
/// edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct ThreeGraph {
    n: usize,
    edges: Vec<Triple>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl TryFrom<RawGraph> for ThreeGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        ThreeGraph::new(raw.n, raw.edges)
    }
}

impl ThreeGraph {
    /// Builds a graph from arbitrary triples. Unsorted triples are normalized;
    /// repeated vertices, out-of-range vertices and duplicate edges are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut set = BTreeSet::new();
        for raw in edges {
            let mut e = raw;
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::DegenerateEdge { edge: raw });
            }
            if e[2] >= n {
                return Err(Error::VertexOutOfRange { vertex: e[2], n });
            }
            if !set.insert(e) {
                return Err(Error::DuplicateEdge { edge: e });
            }
        }
        Ok(ThreeGraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn edgeless(n: usize) -> Self {
        ThreeGraph {
            n,
            edges: Vec::new(),
        }
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    edges.push([i, j, k]);
                }
            }
        }
        ThreeGraph { n, edges }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Triple>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        ThreeGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize, c: usize) -> bool {
        let mut e = [a, b, c];
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// All pairs lying in some edge.
    pub fn shadow(&self) -> PairSet {
        let mut pairs = BTreeSet::new();
        for &[a, b, c] in &self.edges {
            pairs.insert([a, b]);
            pairs.insert([b, c]);
            pairs.insert([a, c]);
        }
        PairSet { n: self.n, pairs }
    }

    /// Pairs completing `v` to an edge.
    pub fn link(&self, v: usize) -> Result<PairSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            if let Some(i) = e.iter().position(|&x| x == v) {
                let rest: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| e[j]).collect();
                pairs.insert([rest[0], rest[1]]);
            }
        }
        Ok(PairSet { n: self.n, pairs })
    }

    /// The full `t`-blow-up: vertex `v` becomes copies `v*t .. v*t + t - 1`,
    /// and every edge becomes all `t^3` transversal copies.
    pub fn blow_up(&self, t: usize) -> Result<ThreeGraph> {
        if t == 0 {
            return Err(Error::ZeroBlowUp);
        }
        let mut edges = Vec::with_capacity(self.edges.len() * t * t * t);
        for &[a, b, c] in &self.edges {
            for x in 0..t {
                for y in 0..t {
                    for z in 0..t {
                        edges.push([a * t + x, b * t + y, c * t + z]);
                    }
                }
            }
        }
        edges.sort_unstable();
        Ok(ThreeGraph::from_sorted_unchecked(self.n * t, edges))
    }

    /// The subgraph induced on `subset`, relabeled so that the `i`-th smallest
    /// member of `subset` becomes vertex `i`. Vertices outside `0..n` and
    /// repeats are ignored.
    pub fn induced_sub(&self, subset: &[usize]) -> ThreeGraph {
        let keep: BTreeSet<usize> = subset.iter().copied().filter(|&v| v < self.n).collect();
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            label[v] = i;
        }
        let mut edges: Vec<Triple> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| label[v] != usize::MAX))
            .map(|e| [label[e[0]], label[e[1]], label[e[2]]])
            .collect();
        // monotone relabeling keeps triples sorted and the list ordered
        edges.sort_unstable();
        ThreeGraph::from_sorted_unchecked(keep.len(), edges)
    }

    /// The image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ThreeGraph> {
        check_permutation(perm, self.n)?;
        let mut edges: Vec<Triple> = self
            .edges
            .iter()
            .map(|e| {
                let mut t = [perm[e[0]], perm[e[1]], perm[e[2]]];
                t.sort_unstable();
                t
            })
            .collect();
        edges.sort_unstable();
        Ok(ThreeGraph::from_sorted_unchecked(self.n, edges))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Display for ThreeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "3-graph on {} vertices:", self.n)?;
        for e in &self.edges {
            write!(f, " {}{}{}", e[0], e[1], e[2])?;
        }
        Ok(())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

/// A set of vertex pairs over `0..n`, iterated in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairSet {
    n: usize,
    pairs: BTreeSet<Pair>,
}

impl PairSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&pair(u, v))
    }

    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        PairSet {
            n: self.n.max(other.n),
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }
}

/// A linear order of the vertices: `order()[p]` is the vertex at position `p`
/// (0-based; the 1-based position of a vertex is `position(v) + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        check_permutation(&order, order.len())?;
        let mut position = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn vertex_at(&self, p: usize) -> usize {
        self.order[p]
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = Error;

    fn try_from(order: Vec<usize>) -> Result<Self> {
        VertexOrdering::new(order)
    }
}

impl From<VertexOrdering> for Vec<usize> {
    fn from(o: VertexOrdering) -> Self {
        o.order
    }
}
