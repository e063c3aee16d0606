use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{split_range, Color, Pattern, PropertyKind};
use crate::error::{Error, Result};
use crate::graph::{pair, Pair, ThreeGraph, Triple, VertexOrdering};

/// An ordering, a shadow coloring and (for the split kinds) the split
/// position `i*`, claimed to witness `kind` for some graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CertificateJson", into = "CertificateJson")]
pub struct PaletteCertificate {
    pub kind: PropertyKind,
    pub ordering: VertexOrdering,
    /// 1-based split position, present exactly for the split kinds.
    pub istar: Option<usize>,
    pub coloring: BTreeMap<Pair, Color>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    kind: PropertyKind,
    ordering: Vec<usize>,
    istar: Option<usize>,
    coloring: Vec<ColoredPair>,
}

#[derive(Serialize, Deserialize)]
struct ColoredPair {
    pair: [usize; 2],
    color: Color,
}

impl TryFrom<CertificateJson> for PaletteCertificate {
    type Error = Error;

    fn try_from(raw: CertificateJson) -> Result<Self> {
        let ordering = VertexOrdering::new(raw.ordering)?;
        let mut coloring = BTreeMap::new();
        for ColoredPair { pair: [u, v], color } in raw.coloring {
            if u == v {
                return Err(Error::Certificate(format!("pair [{u},{v}] repeats a vertex")));
            }
            if coloring.insert(pair(u, v), color).is_some() {
                return Err(Error::Certificate(format!("pair [{u},{v}] colored twice")));
            }
        }
        Ok(PaletteCertificate {
            kind: raw.kind,
            ordering,
            istar: raw.istar,
            coloring,
        })
    }
}

impl From<PaletteCertificate> for CertificateJson {
    fn from(cert: PaletteCertificate) -> Self {
        CertificateJson {
            kind: cert.kind,
            ordering: cert.ordering.into(),
            istar: cert.istar,
            coloring: cert
                .coloring
                .into_iter()
                .map(|(pair, color)| ColoredPair { pair, color })
                .collect(),
        }
    }
}

/// An edge whose color triple matches no admissible pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub edge: Triple,
    /// 1-based positions of the edge's vertices, increasing.
    pub positions: [usize; 3],
    pub found: [Color; 3],
    /// Color triples admissible at these positions.
    pub expected: Vec<[Color; 3]>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.edge;
        write!(
            f,
            "edge {{{a},{b},{c}}} at positions {:?} reads ({}, {}, {}); expected ",
            self.positions, self.found[0], self.found[1], self.found[2]
        )?;
        if self.expected.is_empty() {
            return write!(f, "no pattern is admissible here");
        }
        for (i, t) in self.expected.iter().enumerate() {
            if i > 0 {
                write!(f, " or ")?;
            }
            write!(f, "({}, {}, {})", t[0], t[1], t[2])?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Accept {
        /// Number of edges realizing each pattern, in pattern-table order.
        class_counts: Vec<usize>,
    },
    Reject {
        /// Every offending edge, in edge order; the first one is the headline.
        violations: Vec<Violation>,
        /// Pattern classes with no edge (split-star kind only).
        empty_classes: Vec<usize>,
    },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept { .. })
    }

    pub fn reason(&self) -> Option<String> {
        match self {
            Verdict::Accept { .. } => None,
            Verdict::Reject {
                violations,
                empty_classes,
            } => Some(match violations.first() {
                Some(v) => v.to_string(),
                None => format!("pattern classes {empty_classes:?} are used by no edge"),
            }),
        }
    }
}

impl PaletteCertificate {
    /// Sorted 1-based positions of `edge` and the color triple it reads.
    fn read_edge(&self, edge: &Triple) -> ([usize; 3], [Color; 3]) {
        let mut by_pos = *edge;
        by_pos.sort_unstable_by_key(|&v| self.ordering.position(v));
        let [x, y, z] = by_pos;
        let positions = by_pos.map(|v| self.ordering.position(v) + 1);
        let color = |u, v| self.coloring[&pair(u, v)];
        (positions, [color(x, y), color(y, z), color(x, z)])
    }

    fn check_structure(&self, graph: &ThreeGraph) -> Result<()> {
        let n = graph.n();
        if self.ordering.len() != n {
            return Err(Error::Certificate(format!(
                "ordering has {} vertices, graph has {n}",
                self.ordering.len()
            )));
        }
        match (self.kind.uses_split(), self.istar) {
            (true, None) => {
                return Err(Error::Certificate(format!("{} requires istar", self.kind)))
            }
            (false, Some(_)) => {
                return Err(Error::Certificate(format!("{} takes no istar", self.kind)))
            }
            (true, Some(s)) if !split_range(n).contains(&s) => {
                return Err(Error::Certificate(format!(
                    "istar {s} outside {:?}",
                    split_range(n)
                )))
            }
            _ => {}
        }
        let shadow = graph.shadow();
        if let Some(p) = shadow.iter().find(|p| !self.coloring.contains_key(p)) {
            return Err(Error::Certificate(format!(
                "shadow pair {p:?} has no color"
            )));
        }
        if let Some(p) = self.coloring.keys().find(|p| !shadow.contains(p[0], p[1])) {
            return Err(Error::Certificate(format!(
                "colored pair {p:?} is not in the shadow"
            )));
        }
        let palette = self.kind.palette();
        if let Some((p, c)) = self.coloring.iter().find(|(_, c)| !palette.contains(c)) {
            return Err(Error::Certificate(format!(
                "pair {p:?} has color {c}, outside the {} palette",
                self.kind
            )));
        }
        Ok(())
    }

    /// Checks every edge against the kind's pattern table. Structural
    /// problems (wrong domain, wrong palette, misplaced `istar`) are errors;
    /// pattern failures are a [`Verdict::Reject`].
    pub fn verify(&self, graph: &ThreeGraph) -> Result<Verdict> {
        self.check_structure(graph)?;
        let patterns = self.kind.patterns();
        let mut class_counts = vec![0; patterns.len()];
        let mut violations = Vec::new();
        for edge in graph.edges() {
            let (positions, found) = self.read_edge(edge);
            let admissible: Vec<&Pattern> = patterns
                .iter()
                .filter(|p| p.admits(positions, self.istar))
                .collect();
            match patterns
                .iter()
                .position(|p| p.colors == found && p.admits(positions, self.istar))
            {
                Some(class) => class_counts[class] += 1,
                None => violations.push(Violation {
                    edge: *edge,
                    positions,
                    found,
                    expected: admissible.iter().map(|p| p.colors).collect(),
                }),
            }
        }
        let empty_classes: Vec<usize> = if self.kind == PropertyKind::SpadesStar {
            (0..patterns.len()).filter(|&c| class_counts[c] == 0).collect()
        } else {
            Vec::new()
        };
        if violations.is_empty() && empty_classes.is_empty() {
            Ok(Verdict::Accept { class_counts })
        } else {
            Ok(Verdict::Reject {
                violations,
                empty_classes,
            })
        }
    }

    /// Restriction to the subgraph induced on `subset`, in the relabeling
    /// used by [`ThreeGraph::induced_sub`]. The relative order is kept and
    /// `istar` moves to the number of kept vertices at or before it.
    pub fn restrict(&self, graph: &ThreeGraph, subset: &[usize]) -> PaletteCertificate {
        let sub = graph.induced_sub(subset);
        let mut kept: Vec<usize> = subset.iter().copied().filter(|&v| v < graph.n()).collect();
        kept.sort_unstable();
        kept.dedup();
        let mut label = vec![usize::MAX; graph.n()];
        for (i, &v) in kept.iter().enumerate() {
            label[v] = i;
        }
        let order: Vec<usize> = self
            .ordering
            .order()
            .iter()
            .filter(|&&v| label[v] != usize::MAX)
            .map(|&v| label[v])
            .collect();
        let istar = self.istar.map(|s| {
            let before = self.ordering.order()[..s.min(graph.n())]
                .iter()
                .filter(|&&v| label[v] != usize::MAX)
                .count();
            before.max(1)
        });
        let coloring = sub
            .shadow()
            .iter()
            .map(|[u, v]| (pair(u, v), self.coloring[&pair(kept[u], kept[v])]))
            .collect();
        PaletteCertificate {
            kind: self.kind,
            ordering: VertexOrdering::new(order).expect("restriction of a permutation"),
            istar,
            coloring,
        }
    }

    /// The certificate for `graph.blow_up(t)`: the copies of each vertex sit
    /// consecutively where the vertex was, and every pair of copies inherits
    /// the color of the original pair.
    pub fn lift_to_blow_up(&self, graph: &ThreeGraph, t: usize) -> Result<PaletteCertificate> {
        let blown = graph.blow_up(t)?;
        let order: Vec<usize> = self
            .ordering
            .order()
            .iter()
            .flat_map(|&v| (0..t).map(move |c| v * t + c))
            .collect();
        let coloring = blown
            .shadow()
            .iter()
            .map(|[u, v]| (pair(u, v), self.coloring[&pair(u / t, v / t)]))
            .collect();
        Ok(PaletteCertificate {
            kind: self.kind,
            ordering: VertexOrdering::new(order)?,
            istar: self.istar.map(|s| (s * t).min(blown.n().max(1))),
            coloring,
        })
    }

    /// Applies `recolor` to every pair and switches to `kind`.
    pub fn recolor(
        &self,
        kind: PropertyKind,
        istar: Option<usize>,
        recolor: impl Fn(Color) -> Color,
    ) -> PaletteCertificate {
        PaletteCertificate {
            kind,
            ordering: self.ordering.clone(),
            istar,
            coloring: self.coloring.iter().map(|(&p, &c)| (p, recolor(c))).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization is infallible")
    }

    /// Multi-line JSON with one colored pair per line.
    pub fn to_json_pretty(&self) -> String {
        fn value<T: Serialize>(v: &T) -> String {
            serde_json::to_string(v).expect("certificate serialization is infallible")
        }
        let mut out = String::from("{\n");
        out += &format!("  \"kind\": {},\n", value(&self.kind));
        out += &format!("  \"ordering\": {},\n", value(&self.ordering.order()));
        out += &format!("  \"istar\": {},\n", value(&self.istar));
        out += "  \"coloring\": [";
        for (i, (&pair, &color)) in self.coloring.iter().enumerate() {
            out += if i == 0 { "\n" } else { ",\n" };
            out += &format!("    {}", value(&ColoredPair { pair, color }));
        }
        out += if self.coloring.is_empty() { "]\n}" } else { "\n  ]\n}" };
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
