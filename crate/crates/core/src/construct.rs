//! The random red/blue construction and density auditing.
//!
//! Every pair `{i, j}` of `[n]` gets a color from a seeded splitmix64 stream;
//! a triple `i < j < k` is an edge exactly when it reads `(red, red, blue)` or
//! `(blue, blue, red)`. Every subgraph then carries a CLUBS certificate, while
//! a quarter of all triples are edges, spread evenly.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{pair, Pair, ThreeGraph, VertexOrdering};
use crate::palette::{Color, PaletteCertificate, PropertyKind};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Element `index` (0-based) of the splitmix64 stream started from `seed`.
pub fn splitmix64_at(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stream index of the pair `{i, j}`, `i < j`: `C(j, 2) + i`.
pub fn pair_rank(i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    let j = j as u64;
    j * (j - 1) / 2 + i as u64
}

/// A red/blue coloring of all pairs of `0..n`.
pub trait PairColoring: Send + Sync {
    fn n(&self) -> usize;
    /// Color of `{i, j}`; the order of the arguments does not matter.
    fn color(&self, i: usize, j: usize) -> Color;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitMixColoring {
    pub n: usize,
    pub seed: u64,
}

impl PairColoring for SplitMixColoring {
    fn n(&self) -> usize {
        self.n
    }

    fn color(&self, i: usize, j: usize) -> Color {
        let [i, j] = pair(i, j);
        if splitmix64_at(self.seed, pair_rank(i, j)) & 1 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

/// An explicit coloring, for testing the construction on chosen inputs.
/// Pairs missing from `colors` are red.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedColoring {
    pub n: usize,
    pub colors: BTreeMap<Pair, Color>,
}

impl FixedColoring {
    pub fn monochromatic(n: usize, color: Color) -> FixedColoring {
        let colors = (0..n)
            .flat_map(|j| (0..j).map(move |i| ([i, j], color)))
            .collect();
        FixedColoring { n, colors }
    }
}

impl PairColoring for FixedColoring {
    fn n(&self) -> usize {
        self.n
    }

    fn color(&self, i: usize, j: usize) -> Color {
        self.colors.get(&pair(i, j)).copied().unwrap_or(Color::Red)
    }
}

/// True when `colors` reads one of the two generating patterns.
pub fn generates_edge(colors: [Color; 3]) -> bool {
    use Color::*;
    matches!(colors, [Red, Red, Blue] | [Blue, Blue, Red])
}

/// A constructed graph together with the coloring that produced it.
#[derive(Clone, Debug)]
pub struct RandomConstruction<S> {
    pub graph: ThreeGraph,
    pub source: S,
}

/// The construction on `n` vertices from the splitmix64 coloring with `seed`.
pub fn random_construction(n: usize, seed: u64) -> RandomConstruction<SplitMixColoring> {
    construct_from(SplitMixColoring { n, seed })
}

pub fn construct_from<S: PairColoring>(source: S) -> RandomConstruction<S> {
    let n = source.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ij = source.color(i, j);
            for k in j + 1..n {
                if generates_edge([ij, source.color(j, k), source.color(i, k)]) {
                    edges.push([i, j, k]);
                }
            }
        }
    }
    RandomConstruction {
        graph: ThreeGraph::from_sorted_unchecked(n, edges),
        source,
    }
}

impl<S: PairColoring> RandomConstruction<S> {
    /// The CLUBS certificate of `induced_sub(graph, subset)`: the natural
    /// order of `subset` and the generating colors restricted to its shadow.
    pub fn inherited_certificate(&self, subset: &[usize]) -> Result<PaletteCertificate> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return Err(Error::InvalidArgument("subset repeats a vertex".into()));
        }
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.graph.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.graph.n(),
            });
        }
        let sub = self.graph.induced_sub(&sorted);
        let coloring = sub
            .shadow()
            .iter()
            .map(|[u, v]| ([u, v], self.source.color(sorted[u], sorted[v])))
            .collect();
        Ok(PaletteCertificate {
            kind: PropertyKind::Clubs,
            ordering: VertexOrdering::identity(sorted.len()),
            istar: None,
            coloring,
        })
    }
}

/// Subsets per size are enumerated exhaustively when there are at most this
/// many of them.
pub const EXACT_THRESHOLD: u64 = 2000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeAudit {
    pub size: usize,
    pub exact: bool,
    pub tested: u64,
    pub worst_deficit: f64,
    /// Lowest edge density `e(U) / C(|U|, 3)` seen; `None` below size 3.
    pub min_density: Option<f64>,
    pub worst_subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityAudit {
    pub d: f64,
    pub mu: f64,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Maximum over tested `U` of `d C(|U|,3) - e(U) - mu n^3`.
    pub worst_deficit: f64,
    pub pass: bool,
    pub per_size: Vec<SizeAudit>,
    pub note: &'static str,
}

const AUDIT_NOTE: &str = "mu, subset sizes and sample counts are caller choices; a pass is finite-sample evidence of (d, mu)-density, not a proof";

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Counts the edges inside a vertex subset.
struct EdgeCounter<'a> {
    graph: &'a ThreeGraph,
    words: usize,
    /// Bitset of common neighbours `w` of each pair `u < v`, or `None` for
    /// large graphs where an edge scan is used instead.
    codegree: Option<Vec<u64>>,
}

const CODEGREE_MAX_N: usize = 512;

impl<'a> EdgeCounter<'a> {
    fn new(graph: &'a ThreeGraph) -> Self {
        let n = graph.n();
        let words = n.div_ceil(64).max(1);
        let codegree = (n <= CODEGREE_MAX_N).then(|| {
            let mut bits = vec![0u64; n * n * words];
            let mut set = |u: usize, v: usize, w: usize| {
                bits[(u * n + v) * words + w / 64] |= 1 << (w % 64);
            };
            for &[a, b, c] in graph.edges() {
                set(a, b, c);
                set(a, c, b);
                set(b, c, a);
            }
            bits
        });
        EdgeCounter {
            graph,
            words,
            codegree,
        }
    }

    fn count(&self, subset: &[usize]) -> u64 {
        let n = self.graph.n();
        match &self.codegree {
            Some(bits) => {
                let mut mask = vec![0u64; self.words];
                for &v in subset {
                    mask[v / 64] |= 1 << (v % 64);
                }
                let mut total = 0u64;
                for (x, &u) in subset.iter().enumerate() {
                    for &v in &subset[x + 1..] {
                        let row = &bits[(u * n + v) * self.words..][..self.words];
                        total += row
                            .iter()
                            .zip(&mask)
                            .map(|(a, b)| (a & b).count_ones() as u64)
                            .sum::<u64>();
                    }
                }
                total / 3
            }
            None => {
                let mut member = vec![false; n];
                for &v in subset {
                    member[v] = true;
                }
                self.graph
                    .edges()
                    .iter()
                    .filter(|e| e.iter().all(|&v| member[v]))
                    .count() as u64
            }
        }
    }
}

/// Checks the `(d, mu)`-density inequality on vertex subsets of each size in
/// `sizes`: `samples` uniform subsets per size, or all of them when there
/// are at most [`EXACT_THRESHOLD`].
pub fn density_audit(
    graph: &ThreeGraph,
    d: f64,
    mu: f64,
    sizes: &[usize],
    samples: usize,
    seed: u64,
) -> Result<DensityAudit> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&d) || !mu.is_finite() || mu < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= d <= 1 and mu >= 0, got d = {d}, mu = {mu}"
        )));
    }
    let n = graph.n();
    if let Some(&size) = sizes.iter().find(|&&s| s > n) {
        return Err(Error::SubsetTooLarge { size, n });
    }
    let counter = EdgeCounter::new(graph);
    let slack = mu * (n as f64).powi(3);
    let deficit = |subset: &[usize]| {
        let possible = binomial(subset.len(), 3) as f64;
        let edges = counter.count(subset) as f64;
        let density = (possible > 0.0).then(|| edges / possible);
        (d * possible - edges - slack, density)
    };

    let mut per_size = Vec::new();
    for (size_index, &size) in sizes.iter().enumerate() {
        let total = binomial(n, size);
        let exact = total <= EXACT_THRESHOLD;
        let subsets: Vec<Vec<usize>> = if exact {
            combinations(n, size)
        } else {
            (0..samples)
                .into_par_iter()
                .map(|k| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(((size_index as u64) << 32) | k as u64);
                    let mut s = index::sample(&mut rng, n, size).into_vec();
                    s.sort_unstable();
                    s
                })
                .collect()
        };
        let results: Vec<(f64, Option<f64>)> = subsets.par_iter().map(|s| deficit(s)).collect();
        let (worst_index, worst) = results
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, r)| if r.0 > best.1 { (i, r.0) } else { best });
        let min_density = results
            .iter()
            .filter_map(|r| r.1)
            .fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.min(x))));
        per_size.push(SizeAudit {
            size,
            exact,
            tested: subsets.len() as u64,
            worst_deficit: worst,
            min_density,
            worst_subset: subsets.get(worst_index).cloned().unwrap_or_default(),
        });
    }
    let worst_deficit = per_size
        .iter()
        .map(|s| s.worst_deficit)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(DensityAudit {
        d,
        mu,
        n,
        samples,
        seed,
        worst_deficit,
        pass: worst_deficit <= 0.0,
        per_size,
        note: AUDIT_NOTE,
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for x in i + 1..k {
            current[x] = current[x - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs of splitmix64 seeded with 0, as published with the
        // reference implementation
        assert_eq!(splitmix64_at(0, 0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64_at(0, 1), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(splitmix64_at(0, 2), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn pair_ranks_are_a_bijection() {
        let mut ranks: Vec<u64> = (0..20)
            .flat_map(|j| (0..j).map(move |i| pair_rank(i, j)))
            .collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..190).collect::<Vec<u64>>());
    }

    #[test]
    fn tiny_constructions_are_edgeless() {
        for n in 0..3 {
            assert_eq!(random_construction(n, 7).graph.edge_count(), 0);
        }
        let red = construct_from(FixedColoring::monochromatic(8, Color::Red));
        assert_eq!(red.graph.edge_count(), 0);
    }

    #[test]
    fn fixed_coloring_hook() {
        let mut colors = BTreeMap::new();
        colors.insert([0, 2], Color::Blue);
        let c = construct_from(FixedColoring { n: 3, colors });
        assert_eq!(c.graph.edges(), &[[0, 1, 2]]);
    }

    #[test]
    fn inherited_certificates_edge_cases() {
        let h = random_construction(30, 11);
        assert!(h.inherited_certificate(&[]).unwrap().verify(&h.graph.induced_sub(&[])).unwrap().is_accept());
        let one = h.inherited_certificate(&[4]).unwrap();
        assert!(one.coloring.is_empty());
        assert!(h.inherited_certificate(&[1, 1]).is_err());
        assert!(h.inherited_certificate(&[30]).is_err());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 3).len(), 20);
        assert_eq!(combinations(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(200, 3), 1_313_400);
    }

    #[test]
    fn edge_counter_paths_agree() {
        let h = random_construction(40, 3);
        let counter = EdgeCounter::new(&h.graph);
        let scan = EdgeCounter {
            graph: &h.graph,
            words: 1,
            codegree: None,
        };
        let subset: Vec<usize> = (0..40).step_by(3).collect();
        assert_eq!(counter.count(&subset), scan.count(&subset));
    }

    #[test]
    fn audit_trivial_cases() {
        let k = ThreeGraph::complete(10);
        let a = density_audit(&k, 1.0, 0.0, &[3, 5, 10], 4, 1).unwrap();
        assert!(a.pass && a.worst_deficit <= 0.0);
        let e = ThreeGraph::edgeless(10);
        let a = density_audit(&e, 0.5, 0.0, &[3], 4, 1).unwrap();
        assert!(!a.pass);
        assert!(a.per_size[0].exact);
        assert!(density_audit(&e, 0.5, 0.0, &[11], 4, 1).is_err());
        assert!(density_audit(&e, 0.5, 0.0, &[3], 0, 1).is_err());
    }

    #[test]
    fn audit_is_deterministic() {
        let h = random_construction(60, 5).graph;
        let a = density_audit(&h, 0.25, 0.01, &[20, 40], 8, 9).unwrap();
        let b = density_audit(&h, 0.25, 0.01, &[20, 40], 8, 9).unwrap();
        assert_eq!(a, b);
        assert!(!a.per_size[0].exact);
    }
}
