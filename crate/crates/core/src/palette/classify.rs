use std::fmt;

use serde::{Serialize, Serializer};

use super::{d_star, solve_with, PaletteCertificate, PropertyKind, SolveOptions, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::ThreeGraph;

/// A value that a lower or upper bound on the uniform Turán density can take.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DensityBound {
    Zero,
    Quarter,
    /// The root of `(2 - x)^3 = 27 x`, about 0.2118.
    DStar(f64),
    One,
}

impl DensityBound {
    pub fn value(self) -> f64 {
        match self {
            DensityBound::Zero => 0.0,
            DensityBound::Quarter => 0.25,
            DensityBound::DStar(v) => v,
            DensityBound::One => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DensityBound::Zero => "0",
            DensityBound::Quarter => "1/4",
            DensityBound::DStar(_) => "d*",
            DensityBound::One => "1",
        }
    }
}

impl fmt::Display for DensityBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityBound::DStar(v) => write!(f, "d* ({v:.6})"),
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for DensityBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DensityBound", 2)?;
        st.serialize_field("label", self.label())?;
        st.serialize_field("value", &self.value())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MembershipStatus {
    Sat,
    Unsat,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub kind: PropertyKind,
    pub status: MembershipStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PaletteCertificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub memberships: Vec<Membership>,
    pub lower_bound: DensityBound,
    pub upper_bound: DensityBound,
    /// `"exact 0"`, `"exact 1/4"`, or `None` when the bounds differ.
    pub exact: Option<&'static str>,
    /// One line per implication that produced a bound.
    pub rationale: Vec<String>,
}

impl ClassificationReport {
    pub fn status(&self, kind: PropertyKind) -> MembershipStatus {
        self.memberships
            .iter()
            .find(|m| m.kind == kind)
            .map_or(MembershipStatus::Skipped, |m| m.status)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub solve: SolveOptions,
    /// Skip the SPADES_STAR search, which never affects the bounds.
    pub skip_star: bool,
}

/// [`classify_with`] under default options.
pub fn classify(graph: &ThreeGraph) -> Result<ClassificationReport> {
    classify_with(graph, &ClassifyOptions::default())
}

/// Runs every solver and combines the answers into bounds on the uniform
/// Turán density. A timeout in any needed solver is an error.
pub fn classify_with(graph: &ThreeGraph, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let mut memberships = Vec::new();
    for kind in PropertyKind::ALL {
        if kind == PropertyKind::SpadesStar && opts.skip_star {
            memberships.push(Membership {
                kind,
                status: MembershipStatus::Skipped,
                certificate: None,
            });
            continue;
        }
        let report = solve_with(graph, kind, &opts.solve)?;
        let (status, certificate) = match report.outcome {
            SolveOutcome::Sat(c) => (MembershipStatus::Sat, Some(c)),
            SolveOutcome::Unsat => (MembershipStatus::Unsat, None),
            SolveOutcome::Timeout => {
                return Err(Error::Timeout {
                    what: format!("{kind} search"),
                    elapsed_ms: report.elapsed.as_millis() as u64,
                })
            }
        };
        memberships.push(Membership {
            kind,
            status,
            certificate,
        });
    }
    Ok(combine(memberships))
}

/// Applies the implication table to a full set of memberships.
pub(crate) fn combine(memberships: Vec<Membership>) -> ClassificationReport {
    let sat = |k: PropertyKind| {
        memberships
            .iter()
            .any(|m| m.kind == k && m.status == MembershipStatus::Sat)
    };
    let mut rationale = Vec::new();

    let lower_bound = if sat(PropertyKind::Clubs) {
        rationale.push("clubs SAT: no lower bound beyond 0".to_string());
        DensityBound::Zero
    } else {
        rationale.push("clubs UNSAT: the random red/blue construction is F-free and (1/4, mu)-dense, so lower bound 1/4".to_string());
        DensityBound::Quarter
    };

    let upper_bound = if sat(PropertyKind::Vanishing) {
        rationale.push("vanishing SAT: density is exactly 0".to_string());
        DensityBound::Zero
    } else {
        rationale.push("vanishing UNSAT: density is positive".to_string());
        let mut best = DensityBound::One;
        if sat(PropertyKind::Spades) {
            rationale.push("spades SAT: upper bound 1/4".to_string());
            best = DensityBound::Quarter;
        }
        if sat(PropertyKind::FiveColor) {
            let d = d_star().value;
            rationale.push(format!("five-color SAT: upper bound d* = {d:.12}"));
            if d < best.value() {
                best = DensityBound::DStar(d);
            }
        }
        if best == DensityBound::One {
            rationale.push("no upper-bound certificate: trivial bound 1".to_string());
        }
        best
    };

    assert!(
        lower_bound.value() <= upper_bound.value(),
        "inconsistent memberships: lower {lower_bound} above upper {upper_bound}"
    );
    let exact = match (lower_bound, upper_bound) {
        (DensityBound::Zero, DensityBound::Zero) => Some("exact 0"),
        (DensityBound::Quarter, DensityBound::Quarter) => Some("exact 1/4"),
        _ => None,
    };
    ClassificationReport {
        memberships,
        lower_bound,
        upper_bound,
        exact,
        rationale,
    }
}
