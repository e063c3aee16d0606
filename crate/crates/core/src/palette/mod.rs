//! Ordered shadow colorings and the edge patterns they must realize.
//!
//! Every property here asks for an ordering `v_1, ..., v_f` of the vertices
//! and a coloring of the shadow such that each edge `{v_i, v_j, v_k}` with
//! `i < j < k` reads one of a fixed set of color triples
//! `(color(v_i v_j), color(v_j v_k), color(v_i v_k))`.

mod certificate;
mod classify;
mod dstar;
pub mod golden;
mod oracle;
mod solver;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use certificate::{PaletteCertificate, Verdict, Violation};
pub use classify::{classify, classify_with, ClassificationReport, ClassifyOptions, DensityBound, Membership, MembershipStatus};
pub use dstar::{d_star, DStar};
pub use oracle::{oracle_solve, ORACLE_MAX_SHADOW, ORACLE_MAX_VERTICES};
pub use solver::{solve, solve_with, SolveOptions, SolveOutcome, SolveReport, DEFAULT_MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Green,
    Violet,
    Cyan,
    Black,
}

impl Color {
    pub const ALL: [Color; 6] = [
        Color::Red,
        Color::Blue,
        Color::Green,
        Color::Violet,
        Color::Cyan,
        Color::Black,
    ];

    pub(crate) fn bit(self) -> u8 {
        1 << (self as u8)
    }

    pub(crate) fn from_index(i: u32) -> Color {
        Color::ALL[i as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Green => "green",
            Color::Violet => "violet",
            Color::Cyan => "cyan",
            Color::Black => "black",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    /// One ordered 3-coloring pattern `(red, blue, green)`; characterizes
    /// vanishing uniform Turán density.
    Vanishing,
    /// Two colors, patterns `(red, red, blue)` and `(blue, blue, red)`.
    Clubs,
    /// Six colors and a split position `i*`.
    Spades,
    /// [`PropertyKind::Spades`] with all three pattern classes in use.
    SpadesStar,
    /// Five colors, patterns `(blue, violet, red)` and `(green, cyan, blue)`.
    FiveColor,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 5] = [
        PropertyKind::Vanishing,
        PropertyKind::Clubs,
        PropertyKind::Spades,
        PropertyKind::SpadesStar,
        PropertyKind::FiveColor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Vanishing => "vanishing",
            PropertyKind::Clubs => "clubs",
            PropertyKind::Spades => "spades",
            PropertyKind::SpadesStar => "spades-star",
            PropertyKind::FiveColor => "five-color",
        }
    }

    pub fn palette(self) -> &'static [Color] {
        use Color::*;
        match self {
            PropertyKind::Vanishing => &[Red, Blue, Green],
            PropertyKind::Clubs => &[Red, Blue],
            PropertyKind::Spades | PropertyKind::SpadesStar => &Color::ALL,
            PropertyKind::FiveColor => &[Red, Blue, Green, Violet, Cyan],
        }
    }

    pub(crate) fn palette_mask(self) -> u8 {
        self.palette().iter().fold(0, |m, c| m | c.bit())
    }

    pub fn uses_split(self) -> bool {
        matches!(self, PropertyKind::Spades | PropertyKind::SpadesStar)
    }

    pub fn patterns(self) -> &'static [Pattern] {
        match self {
            PropertyKind::Vanishing => &VANISHING,
            PropertyKind::Clubs => &CLUBS,
            PropertyKind::Spades | PropertyKind::SpadesStar => &SPADES,
            PropertyKind::FiveColor => &FIVE_COLOR,
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PropertyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property `{s}`")))
    }
}

/// Where an edge must sit relative to the split position `i*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitCondition {
    Anywhere,
    /// All three positions are at most `i*`.
    Within,
    /// `i < j < i* < k`.
    Straddles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub colors: [Color; 3],
    pub condition: SplitCondition,
}

impl Pattern {
    const fn new(colors: [Color; 3], condition: SplitCondition) -> Pattern {
        Pattern { colors, condition }
    }

    /// `positions` are the 1-based sorted positions `i < j < k`.
    pub fn admits(&self, positions: [usize; 3], istar: Option<usize>) -> bool {
        let [_, j, k] = positions;
        match (self.condition, istar) {
            (SplitCondition::Anywhere, _) => true,
            (SplitCondition::Within, Some(s)) => k <= s,
            (SplitCondition::Straddles, Some(s)) => j < s && s < k,
            (_, None) => false,
        }
    }
}

use Color::*;
use SplitCondition::*;

const VANISHING: [Pattern; 1] = [Pattern::new([Red, Blue, Green], Anywhere)];
const CLUBS: [Pattern; 2] = [
    Pattern::new([Red, Red, Blue], Anywhere),
    Pattern::new([Blue, Blue, Red], Anywhere),
];
const SPADES: [Pattern; 3] = [
    Pattern::new([Blue, Violet, Red], Anywhere),
    Pattern::new([Green, Cyan, Blue], Within),
    Pattern::new([Green, Black, Red], Straddles),
];
const FIVE_COLOR: [Pattern; 2] = [
    Pattern::new([Blue, Violet, Red], Anywhere),
    Pattern::new([Green, Cyan, Blue], Anywhere),
];

/// Admissible values of `i*` for a graph on `n` vertices. An empty vertex set
/// still gets the single value 1 so that the empty graph has a certificate.
pub fn split_range(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=n.max(1)
}
