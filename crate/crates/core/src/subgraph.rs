//! Sub-hypergraph containment by backtracking over injective vertex maps.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Pair, ThreeGraph};

pub const MAX_PATTERN_VERTICES: usize = 12;

/// Looks for an injective map `pattern -> host` sending every edge of
/// `pattern` to an edge of `host`. Returns `map` with `map[v]` the host
/// vertex assigned to pattern vertex `v`.
pub fn contains_sub(host: &ThreeGraph, pattern: &ThreeGraph) -> Result<Option<Vec<usize>>> {
    if pattern.n() > MAX_PATTERN_VERTICES {
        return Err(Error::GuardExceeded {
            what: "pattern vertex count",
            limit: MAX_PATTERN_VERTICES,
            actual: pattern.n(),
        });
    }
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let plan = Plan::new(pattern);
    let mut codegree: HashMap<Pair, Vec<usize>> = HashMap::new();
    for &[a, b, c] in host.edges() {
        codegree.entry([a, b]).or_default().push(c);
        codegree.entry([a, c]).or_default().push(b);
        codegree.entry([b, c]).or_default().push(a);
    }
    let search = Search {
        host,
        host_degree: host.degrees(),
        codegree,
        plan,
    };
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    Ok(search.extend(0, &mut map, &mut used).then_some(map))
}

/// True when `map` is injective and sends every edge of `pattern` into `host`.
/// Independent of the search; used to double-check its answers.
pub fn is_embedding(host: &ThreeGraph, pattern: &ThreeGraph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&h| h >= host.n()) {
        return false;
    }
    let mut seen = vec![false; host.n()];
    if map.iter().any(|&h| std::mem::replace(&mut seen[h], true)) {
        return false;
    }
    pattern
        .edges()
        .iter()
        .all(|e| host.has_edge(map[e[0]], map[e[1]], map[e[2]]))
}

struct Plan {
    /// Pattern vertices in the order they are mapped.
    order: Vec<usize>,
    degree: Vec<usize>,
    /// For each step, the pattern edges completed by mapping `order[step]`,
    /// given as the two partner vertices.
    closing: Vec<Vec<[usize; 2]>>,
}

impl Plan {
    fn new(pattern: &ThreeGraph) -> Plan {
        let n = pattern.n();
        let degree = pattern.degrees();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        // greedy: most edges into the placed set first, then highest degree
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let touching = pattern
                        .edges()
                        .iter()
                        .filter(|e| e.contains(&v) && e.iter().filter(|&&u| placed[u]).count() == 2)
                        .count();
                    (touching, degree[v], std::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut step_of = vec![0; n];
        for (s, &v) in order.iter().enumerate() {
            step_of[v] = s;
        }
        let mut closing = vec![Vec::new(); n];
        for e in pattern.edges() {
            let last = *e.iter().max_by_key(|&&v| step_of[v]).unwrap();
            let others: Vec<usize> = e.iter().copied().filter(|&v| v != last).collect();
            closing[step_of[last]].push([others[0], others[1]]);
        }
        Plan {
            order,
            degree,
            closing,
        }
    }
}

struct Search<'a> {
    host: &'a ThreeGraph,
    host_degree: Vec<usize>,
    codegree: HashMap<Pair, Vec<usize>>,
    plan: Plan,
}

impl Search<'_> {
    fn extend(&self, step: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if step == self.plan.order.len() {
            return true;
        }
        let v = self.plan.order[step];
        let closing = &self.plan.closing[step];
        let try_candidate = |h: usize, map: &mut [usize], used: &mut [bool]| -> bool {
            if used[h] || self.host_degree[h] < self.plan.degree[v] {
                return false;
            }
            if !closing
                .iter()
                .all(|&[a, b]| self.host.has_edge(map[a], map[b], h))
            {
                return false;
            }
            map[v] = h;
            used[h] = true;
            if self.extend(step + 1, map, used) {
                return true;
            }
            used[h] = false;
            map[v] = usize::MAX;
            false
        };
        match closing.first() {
            Some(&[a, b]) => {
                let key = crate::graph::pair(map[a], map[b]);
                let candidates = self.codegree.get(&key).map(Vec::as_slice).unwrap_or(&[]);
                candidates.iter().any(|&h| try_candidate(h, map, used))
            }
            None => (0..self.host.n()).any(|h| try_candidate(h, map, used)),
        }
    }
}
