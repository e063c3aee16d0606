//! Named 3-graphs.
//!
//! Graphs built on `K4^(3)-` use the vertex labels `a, b, c, d, x, y, z`,
//! mapped to `0..=6` in that order. Wheels put the hub at 0 and the rim
//! `v_1 .. v_{t-1}` at `1..t`. Double pyramids put the apexes `x, y` at 0 and 1
//! and the rim vertex `v_i` at `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::ThreeGraph;

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;
pub const X: usize = 4;
pub const Y: usize = 5;
pub const Z: usize = 6;

pub const VERTEX_NAMES: [&str; 7] = ["a", "b", "c", "d", "x", "y", "z"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    K4Minus,
    F5Star,
    F6Star,
    F7Star,
    F7StarHat,
    Wheel(usize),
    DoublePyramid(usize),
    SingleEdge,
    Edgeless(usize),
}

const K4_MINUS: [[usize; 3]; 3] = [[A, B, C], [A, B, D], [A, C, D]];
// each added vertex has a perfect matching of {a,b,c,d} as its link
const X_EDGES: [[usize; 3]; 2] = [[X, A, B], [X, C, D]];
const Y_EDGES: [[usize; 3]; 2] = [[Y, A, C], [Y, B, D]];
const Z_EDGES: [[usize; 3]; 2] = [[Z, A, D], [Z, B, C]];

impl Named {
    /// Every parameter-free entry plus a few small members of each family.
    pub fn examples() -> Vec<Named> {
        vec![
            Named::SingleEdge,
            Named::K4Minus,
            Named::F5Star,
            Named::F6Star,
            Named::F7Star,
            Named::F7StarHat,
            Named::Wheel(3),
            Named::Wheel(4),
            Named::Wheel(5),
            Named::Wheel(6),
            Named::Wheel(7),
            Named::Wheel(8),
            Named::DoublePyramid(4),
            Named::DoublePyramid(5),
        ]
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::K4Minus => write!(f, "k4minus"),
            Named::F5Star => write!(f, "f5star"),
            Named::F6Star => write!(f, "f6star"),
            Named::F7Star => write!(f, "f7star"),
            Named::F7StarHat => write!(f, "f7star_hat"),
            Named::Wheel(t) => write!(f, "wheel:{t}"),
            Named::DoublePyramid(t) => write!(f, "double_pyramid:{t}"),
            Named::SingleEdge => write!(f, "single_edge"),
            Named::Edgeless(n) => write!(f, "edgeless:{n}"),
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let param = |what: &str| -> Result<usize> {
            match params.as_slice() {
                [p] => p.parse().map_err(|_| Error::CatalogParams {
                    name: name.to_string(),
                    reason: format!("{what} `{p}` is not a non-negative integer"),
                }),
                _ => Err(Error::CatalogParams {
                    name: name.to_string(),
                    reason: format!("expected exactly one parameter ({what})"),
                }),
            }
        };
        let no_params = |named: Named| -> Result<Named> {
            if params.is_empty() {
                Ok(named)
            } else {
                Err(Error::CatalogParams {
                    name: name.to_string(),
                    reason: "takes no parameters".into(),
                })
            }
        };
        match name {
            "k4minus" => no_params(Named::K4Minus),
            "f5star" => no_params(Named::F5Star),
            "f6star" => no_params(Named::F6Star),
            "f7star" => no_params(Named::F7Star),
            "f7star_hat" => no_params(Named::F7StarHat),
            "single_edge" => no_params(Named::SingleEdge),
            "wheel" => Ok(Named::Wheel(param("t")?)),
            "double_pyramid" => Ok(Named::DoublePyramid(param("t")?)),
            "edgeless" => Ok(Named::Edgeless(param("n")?)),
            _ => Err(Error::UnknownCatalogName(s.to_string())),
        }
    }
}

pub fn build(named: &Named) -> Result<ThreeGraph> {
    match *named {
        Named::K4Minus => ThreeGraph::new(4, K4_MINUS),
        Named::F5Star => ThreeGraph::new(5, K4_MINUS.into_iter().chain(X_EDGES)),
        Named::F6Star => ThreeGraph::new(6, K4_MINUS.into_iter().chain(X_EDGES).chain(Y_EDGES)),
        Named::F7Star => ThreeGraph::new(
            7,
            K4_MINUS
                .into_iter()
                .chain(X_EDGES)
                .chain(Y_EDGES)
                .chain(Z_EDGES),
        ),
        Named::F7StarHat => ThreeGraph::new(
            7,
            K4_MINUS
                .into_iter()
                .chain(X_EDGES)
                .chain(Y_EDGES)
                .chain(Z_EDGES)
                .chain([[X, Y, Z]]),
        ),
        Named::Wheel(t) => {
            if t < 3 {
                return Err(Error::CatalogParams {
                    name: "wheel".into(),
                    reason: format!("t must be at least 3, got {t}"),
                });
            }
            ThreeGraph::new(t, rim_edges(t, &[0], |i| i))
        }
        Named::DoublePyramid(t) => {
            if t < 4 {
                return Err(Error::CatalogParams {
                    name: "double_pyramid".into(),
                    reason: format!("t must be at least 4, got {t}"),
                });
            }
            ThreeGraph::new(t + 1, rim_edges(t, &[0, 1], |i| i + 1))
        }
        Named::SingleEdge => ThreeGraph::new(3, [[0, 1, 2]]),
        Named::Edgeless(n) => Ok(ThreeGraph::edgeless(n)),
    }
}

/// Edges `{apex, v_i, v_{i+1}}` for every apex, with the rim `v_1 .. v_{t-1}`
/// closed into a cycle. For `t = 3` the two rim edges coincide.
fn rim_edges(t: usize, apexes: &[usize], label: impl Fn(usize) -> usize) -> BTreeSet<[usize; 3]> {
    let rim = t - 1;
    let mut edges = BTreeSet::new();
    for &apex in apexes {
        for i in 1..=rim {
            let next = i % rim + 1;
            let mut e = [apex, label(i), label(next)];
            e.sort_unstable();
            edges.insert(e);
        }
    }
    edges
}

/// Resolves a graph reference: either `name:<catalog entry>` or a path to a
/// graph JSON file.
pub fn resolve(reference: &str) -> Result<ThreeGraph> {
    match reference.strip_prefix("name:") {
        Some(name) => build(&name.parse()?),
        None => ThreeGraph::from_json(&std::fs::read_to_string(Path::new(reference))?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f7star_hat_has_ten_edges() {
        let g = build(&Named::F7StarHat).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 10);
        for e in [
            [A, B, C],
            [A, B, D],
            [A, C, D],
            [X, A, B],
            [X, C, D],
            [Y, A, C],
            [Y, B, D],
            [Z, A, D],
            [Z, B, C],
            [X, Y, Z],
        ] {
            assert!(g.has_edge(e[0], e[1], e[2]), "{e:?}");
        }
    }

    #[test]
    fn wheels() {
        assert_eq!(
            build(&Named::Wheel(4)).unwrap(),
            build(&Named::K4Minus).unwrap()
        );
        let w5 = build(&Named::Wheel(5)).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (5, 4));
        assert_eq!(w5.edges(), &[[0, 1, 2], [0, 1, 4], [0, 2, 3], [0, 3, 4]]);
        let w3 = build(&Named::Wheel(3)).unwrap();
        assert_eq!(w3, build(&Named::SingleEdge).unwrap());
        assert!(build(&Named::Wheel(2)).is_err());
    }

    #[test]
    fn double_pyramid_is_a_blow_up_shape() {
        let p = build(&Named::DoublePyramid(5)).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 8);
        // both apexes see the same rim cycle
        assert_eq!(p.link(0).unwrap().len(), 4);
        assert_eq!(
            p.link(0).unwrap().iter().collect::<Vec<_>>(),
            p.link(1).unwrap().iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn nested_family() {
        let chain = [
            Named::K4Minus,
            Named::F5Star,
            Named::F6Star,
            Named::F7Star,
        ];
        for w in chain.windows(2) {
            let small = build(&w[0]).unwrap();
            let big = build(&w[1]).unwrap();
            let first: Vec<usize> = (0..small.n()).collect();
            assert_eq!(big.induced_sub(&first), small);
        }
        // the hat adds exactly the edge xyz on the same vertex set
        let f7 = build(&Named::F7Star).unwrap();
        let hat = build(&Named::F7StarHat).unwrap();
        let mut edges = f7.edges().to_vec();
        edges.push([X, Y, Z]);
        assert_eq!(hat, ThreeGraph::new(7, edges).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for named in Named::examples().into_iter().chain([Named::Edgeless(4)]) {
            assert_eq!(named.to_string().parse::<Named>().unwrap(), named);
        }
        assert!(matches!(
            "petersen".parse::<Named>(),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!("wheel".parse::<Named>().is_err());
        assert!("k4minus:3".parse::<Named>().is_err());
        assert_eq!(resolve("name:wheel:6").unwrap().edge_count(), 5);
    }
}
