//! Exhaustive search for palette certificates.
//!
//! Orderings are built one position at a time, trying unplaced vertices in
//! increasing label order. Once all three vertices of an edge are placed the
//! edge becomes a constraint over the domains of its three shadow pairs: some
//! admissible pattern must fit those domains. Constraints are propagated to a
//! fixpoint after every placement; an emptied domain or an edge with no fitting
//! pattern cuts the branch. With every vertex placed, the remaining freedom is
//! resolved by branching on the pattern of the first edge that still has more
//! than one candidate.
//!
//! Isolated vertices constrain nothing and are appended to every ordering.
//! For the split kinds `i*` is the outermost loop, from the number of
//! non-isolated vertices down to 1. For CLUBS the first shadow pair is fixed
//! to red, which is safe because swapping red and blue maps the pattern set
//! onto itself.
//!
//! The top-level branches (choice of the first vertex) may run in parallel.
//! The answer is always the certificate of the lowest-indexed successful
//! branch, which is also what a sequential run finds first.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{split_range, Color, PaletteCertificate, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::{ThreeGraph, Triple, VertexOrdering};

pub const DEFAULT_MAX_VERTICES: usize = 10;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub max_vertices: usize,
    pub timeout: Option<Duration>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            timeout: Some(DEFAULT_TIMEOUT),
            threads: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat(PaletteCertificate),
    Unsat,
    /// The deadline passed before the search finished. Says nothing about
    /// satisfiability.
    Timeout,
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }

    pub fn certificate(&self) -> Option<&PaletteCertificate> {
        match self {
            SolveOutcome::Sat(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    /// Search nodes visited across all branches and split positions.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// [`solve_with`] under default options.
pub fn solve(graph: &ThreeGraph, kind: PropertyKind) -> Result<SolveOutcome> {
    Ok(solve_with(graph, kind, &SolveOptions::default())?.outcome)
}

pub fn solve_with(graph: &ThreeGraph, kind: PropertyKind, opts: &SolveOptions) -> Result<SolveReport> {
    if graph.n() > opts.max_vertices {
        return Err(Error::GuardExceeded {
            what: "vertex count",
            limit: opts.max_vertices,
            actual: graph.n(),
        });
    }
    let start = Instant::now();
    let problem = Problem::new(graph, kind);
    let control = Control {
        deadline: opts.timeout.map(|t| start + t),
        timed_out: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
    };
    let run = || problem.run(&control);
    let outcome = match opts.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    if let SolveOutcome::Sat(cert) = &outcome {
        debug_assert!(
            cert.verify(graph).map(|v| v.is_accept()).unwrap_or(false),
            "solver produced a certificate that does not verify"
        );
    }
    Ok(SolveReport {
        outcome,
        nodes: control.nodes.load(AtomicOrdering::Relaxed),
        elapsed: start.elapsed(),
    })
}

const NONE: u32 = u32::MAX;

struct Control {
    deadline: Option<Instant>,
    timed_out: AtomicBool,
    nodes: AtomicU64,
}

struct Problem {
    kind: PropertyKind,
    /// Color bits of each pattern, per pair slot.
    pattern_bits: Vec<[u8; 3]>,
    n: usize,
    active: Vec<usize>,
    isolated: Vec<usize>,
    pairs: Vec<[usize; 2]>,
    pair_id: Vec<u32>,
    edges: Vec<Triple>,
    vertex_edges: Vec<Vec<u32>>,
    pair_edges: Vec<Vec<u32>>,
    initial_domains: Vec<u8>,
}

impl Problem {
    fn new(graph: &ThreeGraph, kind: PropertyKind) -> Problem {
        let n = graph.n();
        let pairs: Vec<[usize; 2]> = graph.shadow().iter().collect();
        let mut pair_id = vec![NONE; n * n];
        for (id, &[u, v]) in pairs.iter().enumerate() {
            pair_id[u * n + v] = id as u32;
            pair_id[v * n + u] = id as u32;
        }
        let edges = graph.edges().to_vec();
        let mut vertex_edges = vec![Vec::new(); n];
        let mut pair_edges = vec![Vec::new(); pairs.len()];
        for (e, &[a, b, c]) in edges.iter().enumerate() {
            for v in [a, b, c] {
                vertex_edges[v].push(e as u32);
            }
            for (u, v) in [(a, b), (b, c), (a, c)] {
                pair_edges[pair_id[u * n + v] as usize].push(e as u32);
            }
        }
        let degrees = graph.degrees();
        let active = (0..n).filter(|&v| degrees[v] > 0).collect();
        let isolated = (0..n).filter(|&v| degrees[v] == 0).collect();
        let mut initial_domains = vec![kind.palette_mask(); pairs.len()];
        if kind == PropertyKind::Clubs {
            if let Some(first) = initial_domains.first_mut() {
                *first = Color::Red.bit();
            }
        }
        Problem {
            kind,
            pattern_bits: kind
                .patterns()
                .iter()
                .map(|p| p.colors.map(Color::bit))
                .collect(),
            n,
            active,
            isolated,
            pairs,
            pair_id,
            edges,
            vertex_edges,
            pair_edges,
            initial_domains,
        }
    }

    fn pair_of(&self, u: usize, v: usize) -> u32 {
        self.pair_id[u * self.n + v]
    }

    fn run(&self, control: &Control) -> SolveOutcome {
        if self.kind.uses_split() {
            for istar in split_range(self.active.len()).rev() {
                match self.run_split(Some(istar), control) {
                    SolveOutcome::Unsat => continue,
                    done => return done,
                }
            }
            SolveOutcome::Unsat
        } else {
            self.run_split(None, control)
        }
    }

    fn run_split(&self, istar: Option<usize>, control: &Control) -> SolveOutcome {
        let branches: Vec<Option<usize>> = if self.active.is_empty() {
            vec![None]
        } else {
            self.active.iter().copied().map(Some).collect()
        };
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<Branch> = branches
            .par_iter()
            .enumerate()
            .map(|(index, &first)| {
                let mut search = Search::new(self, istar, control, &best, index);
                let found = match first {
                    Some(v) => search.place(v) && search.extend(),
                    None => search.extend(),
                };
                control.nodes.fetch_add(search.nodes, AtomicOrdering::Relaxed);
                if search.aborted {
                    Branch::Aborted
                } else if found {
                    best.fetch_min(index, AtomicOrdering::Relaxed);
                    Branch::Found(search.certificate())
                } else {
                    Branch::Exhausted
                }
            })
            .collect();
        let mut outcome = SolveOutcome::Unsat;
        for result in results {
            match result {
                Branch::Found(cert) => return SolveOutcome::Sat(cert),
                Branch::Aborted => outcome = SolveOutcome::Timeout,
                Branch::Exhausted => {}
            }
        }
        // an aborted branch without a successful predecessor can only be a timeout
        debug_assert!(
            outcome == SolveOutcome::Unsat || control.timed_out.load(AtomicOrdering::Relaxed)
        );
        outcome
    }
}

enum Branch {
    Found(PaletteCertificate),
    Exhausted,
    Aborted,
}

#[derive(Clone, Copy)]
struct Fixed {
    pairs: [u32; 3],
    /// Bit `p` set when pattern `p` is admissible at the edge's positions.
    admissible: u8,
}

struct Search<'a> {
    problem: &'a Problem,
    istar: Option<usize>,
    control: &'a Control,
    best: &'a AtomicUsize,
    index: usize,
    position: Vec<u32>,
    placed: Vec<usize>,
    domains: Vec<u8>,
    trail: Vec<(u32, u8)>,
    fixed: Vec<Option<Fixed>>,
    fixed_stack: Vec<u32>,
    queue: Vec<u32>,
    queued: Vec<bool>,
    nodes: u64,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(
        problem: &'a Problem,
        istar: Option<usize>,
        control: &'a Control,
        best: &'a AtomicUsize,
        index: usize,
    ) -> Search<'a> {
        Search {
            problem,
            istar,
            control,
            best,
            index,
            position: vec![NONE; problem.n],
            placed: Vec::with_capacity(problem.n),
            domains: problem.initial_domains.clone(),
            trail: Vec::new(),
            fixed: vec![None; problem.edges.len()],
            fixed_stack: Vec::new(),
            queue: Vec::new(),
            queued: vec![false; problem.edges.len()],
            nodes: 0,
            aborted: false,
        }
    }

    /// Counts a node and polls for cancellation. Returns false once the
    /// search must stop.
    fn tick(&mut self) -> bool {
        if self.aborted {
            return false;
        }
        self.nodes += 1;
        if self.best.load(AtomicOrdering::Relaxed) < self.index {
            self.aborted = true;
        } else if self.nodes % 1024 == 1 {
            if self.control.timed_out.load(AtomicOrdering::Relaxed) {
                self.aborted = true;
            } else if let Some(deadline) = self.control.deadline {
                if Instant::now() >= deadline {
                    self.control.timed_out.store(true, AtomicOrdering::Relaxed);
                    self.aborted = true;
                }
            }
        }
        !self.aborted
    }

    fn mark(&self) -> (usize, usize) {
        (self.trail.len(), self.fixed_stack.len())
    }

    fn undo(&mut self, (trail_len, fixed_len): (usize, usize)) {
        while self.trail.len() > trail_len {
            let (pair, old) = self.trail.pop().unwrap();
            self.domains[pair as usize] = old;
        }
        while self.fixed_stack.len() > fixed_len {
            let e = self.fixed_stack.pop().unwrap();
            self.fixed[e as usize] = None;
        }
    }

    fn narrow(&mut self, pair: u32, mask: u8) -> bool {
        let old = self.domains[pair as usize];
        let new = old & mask;
        if new != old {
            self.trail.push((pair, old));
            self.domains[pair as usize] = new;
            for &e in &self.problem.pair_edges[pair as usize] {
                if self.fixed[e as usize].is_some() && !self.queued[e as usize] {
                    self.queued[e as usize] = true;
                    self.queue.push(e);
                }
            }
        }
        new != 0
    }

    /// Bitmask of patterns that are admissible for a fixed edge and fit the
    /// current domains.
    fn fitting(&self, f: &Fixed) -> u8 {
        let mut fits = 0;
        for (p, bits) in self.problem.pattern_bits.iter().enumerate() {
            if f.admissible & (1 << p) != 0
                && (0..3).all(|s| self.domains[f.pairs[s] as usize] & bits[s] != 0)
            {
                fits |= 1 << p;
            }
        }
        fits
    }

    fn clear_queue(&mut self) {
        for q in self.queue.drain(..) {
            self.queued[q as usize] = false;
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(e) = self.queue.pop() {
            self.queued[e as usize] = false;
            let f = self.fixed[e as usize].expect("only fixed edges are queued");
            let fits = self.fitting(&f);
            let mut support = [0u8; 3];
            for (p, bits) in self.problem.pattern_bits.iter().enumerate() {
                if fits & (1 << p) != 0 {
                    for s in 0..3 {
                        support[s] |= bits[s];
                    }
                }
            }
            if fits == 0 || !(0..3).all(|s| self.narrow(f.pairs[s], support[s])) {
                self.clear_queue();
                return false;
            }
        }
        true
    }

    /// Puts `v` at the next position and propagates every edge this closes.
    fn place(&mut self, v: usize) -> bool {
        let p = self.placed.len();
        self.position[v] = p as u32;
        self.placed.push(v);
        let problem = self.problem;
        for &e in &problem.vertex_edges[v] {
            let edge = problem.edges[e as usize];
            if edge.iter().any(|&u| self.position[u] == NONE) {
                continue;
            }
            let mut by_pos = edge;
            by_pos.sort_unstable_by_key(|&u| self.position[u]);
            let [x, y, z] = by_pos;
            let positions = by_pos.map(|u| self.position[u] as usize + 1);
            let admissible = problem
                .kind
                .patterns()
                .iter()
                .enumerate()
                .filter(|(_, pat)| pat.admits(positions, self.istar))
                .fold(0u8, |m, (i, _)| m | (1 << i));
            if admissible == 0 {
                self.clear_queue();
                return false;
            }
            self.fixed[e as usize] = Some(Fixed {
                pairs: [
                    problem.pair_of(x, y),
                    problem.pair_of(y, z),
                    problem.pair_of(x, z),
                ],
                admissible,
            });
            self.fixed_stack.push(e);
            self.queued[e as usize] = true;
            self.queue.push(e);
        }
        self.propagate()
    }

    fn unplace(&mut self) {
        let v = self.placed.pop().expect("something is placed");
        self.position[v] = NONE;
    }

    fn extend(&mut self) -> bool {
        if !self.tick() {
            return false;
        }
        if self.placed.len() == self.problem.active.len() {
            return self.resolve_colors();
        }
        let problem = self.problem;
        for &v in &problem.active {
            if self.position[v] != NONE {
                continue;
            }
            let mark = self.mark();
            if self.place(v) && self.extend() {
                return true;
            }
            self.undo(mark);
            self.unplace();
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// With the ordering complete, pick a pattern for every edge.
    fn resolve_colors(&mut self) -> bool {
        if !self.tick() {
            return false;
        }
        let classes = self.problem.pattern_bits.len();
        let mut reachable = 0u8;
        let mut branch_on = None;
        for e in 0..self.fixed.len() {
            let f = self.fixed[e].expect("all edges are fixed once the ordering is complete");
            let fits = self.fitting(&f);
            reachable |= fits;
            if branch_on.is_none() && fits.count_ones() > 1 {
                branch_on = Some((f, fits));
            }
        }
        if self.problem.kind == PropertyKind::SpadesStar && reachable != (1 << classes) - 1 {
            return false;
        }
        let Some((f, fits)) = branch_on else {
            return true;
        };
        for p in 0..classes {
            if fits & (1 << p) == 0 {
                continue;
            }
            let bits = self.problem.pattern_bits[p];
            let mark = self.mark();
            let ok = (0..3).all(|s| self.narrow(f.pairs[s], bits[s])) && self.propagate();
            if !ok {
                self.clear_queue();
            }
            if ok && self.resolve_colors() {
                return true;
            }
            self.undo(mark);
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn certificate(&self) -> PaletteCertificate {
        let order: Vec<usize> = self
            .placed
            .iter()
            .chain(&self.problem.isolated)
            .copied()
            .collect();
        let coloring = self
            .problem
            .pairs
            .iter()
            .zip(&self.domains)
            .map(|(&p, &d)| {
                debug_assert_eq!(d.count_ones(), 1);
                (p, Color::from_index(d.trailing_zeros()))
            })
            .collect();
        PaletteCertificate {
            kind: self.problem.kind,
            ordering: VertexOrdering::new(order).expect("placed + isolated is a permutation"),
            istar: self.istar,
            coloring,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, Named};

    fn status(named: Named, kind: PropertyKind) -> bool {
        let g = build(&named).unwrap();
        match solve(&g, kind).unwrap() {
            SolveOutcome::Sat(cert) => {
                assert!(cert.verify(&g).unwrap().is_accept(), "{named} {kind}");
                true
            }
            SolveOutcome::Unsat => false,
            SolveOutcome::Timeout => panic!("timeout on {named} {kind}"),
        }
    }

    #[test]
    fn wheel_four_has_no_clubs_certificate() {
        assert!(!status(Named::Wheel(4), PropertyKind::Clubs));
    }

    #[test]
    fn odd_wheels_vanish() {
        assert!(status(Named::Wheel(5), PropertyKind::Vanishing));
        assert!(status(Named::Wheel(5), PropertyKind::Clubs));
        assert!(!status(Named::K4Minus, PropertyKind::Vanishing));
    }

    #[test]
    fn f7star_hat_has_split_star_certificate() {
        assert!(status(Named::F7StarHat, PropertyKind::SpadesStar));
    }

    #[test]
    fn edgeless_conventions() {
        for n in [0, 1, 4] {
            let g = ThreeGraph::edgeless(n);
            for kind in PropertyKind::ALL {
                let outcome = solve(&g, kind).unwrap();
                assert_eq!(outcome.is_sat(), kind != PropertyKind::SpadesStar, "{n} {kind}");
                if let SolveOutcome::Sat(cert) = outcome {
                    assert!(cert.coloring.is_empty());
                    assert!(cert.verify(&g).unwrap().is_accept());
                }
            }
        }
    }

    #[test]
    fn isolated_vertices_go_last() {
        let g = ThreeGraph::new(5, [[1, 3, 4]]).unwrap();
        let SolveOutcome::Sat(cert) = solve(&g, PropertyKind::Vanishing).unwrap() else {
            panic!("single edge vanishes")
        };
        assert_eq!(&cert.ordering.order()[3..], &[0, 2]);
    }

    #[test]
    fn guard_and_timeout() {
        let g = ThreeGraph::edgeless(11);
        assert!(matches!(
            solve(&g, PropertyKind::Clubs),
            Err(Error::GuardExceeded { .. })
        ));
        let opts = SolveOptions {
            max_vertices: 12,
            timeout: Some(Duration::ZERO),
            threads: Some(1),
        };
        // complete graph on 9 vertices: no certificate of any kind, and far
        // too many nodes to exhaust before a zero deadline is noticed
        let k9 = ThreeGraph::complete(9);
        let report = solve_with(&k9, PropertyKind::Spades, &opts).unwrap();
        assert_eq!(report.outcome, SolveOutcome::Timeout);
    }

    #[test]
    fn thread_count_does_not_change_the_answer() {
        let g = build(&Named::F7StarHat).unwrap();
        let answers: Vec<SolveOutcome> = [1, 2, 3]
            .into_iter()
            .map(|threads| {
                let opts = SolveOptions {
                    threads: Some(threads),
                    ..SolveOptions::default()
                };
                solve_with(&g, PropertyKind::Spades, &opts).unwrap().outcome
            })
            .collect();
        assert!(answers[0].is_sat());
        assert!(answers.windows(2).all(|w| w[0] == w[1]));
    }
}
