//! Hand-built certificates for the catalog graphs whose membership is known
//! in closed form. Each constructor is checked against the verifier in tests.

use std::collections::BTreeMap;

use super::{Color, PaletteCertificate, PropertyKind};
use crate::catalog::{A, B, C, D, X, Y, Z};
use crate::error::{Error, Result};
use crate::graph::{pair, VertexOrdering};

/// The six-color certificate for the hat-augmented F*_7, valid for both
/// [`PropertyKind::Spades`] and [`PropertyKind::SpadesStar`].
pub fn f7star_hat(kind: PropertyKind) -> Result<PaletteCertificate> {
    if !kind.uses_split() {
        return Err(Error::InvalidArgument(format!(
            "no hand-built {kind} certificate for f7star-hat"
        )));
    }
    use Color::*;
    let classes: [(Color, &[[usize; 2]]); 6] = [
        (Red, &[[A, D], [Y, D], [X, D]]),
        (Blue, &[[A, Z], [A, X], [A, C], [Y, X], [Z, C], [X, C]]),
        (Green, &[[A, Y], [A, B], [Y, Z], [Y, B], [Z, B]]),
        (Violet, &[[Z, D], [C, D]]),
        (Cyan, &[[Y, C], [B, X], [B, C], [Z, X]]),
        (Black, &[[B, D]]),
    ];
    let coloring = classes
        .iter()
        .flat_map(|&(color, pairs)| pairs.iter().map(move |&[u, v]| (pair(u, v), color)))
        .collect();
    Ok(PaletteCertificate {
        kind,
        ordering: VertexOrdering::new(vec![A, Y, Z, B, X, C, D])?,
        istar: Some(6),
        coloring,
    })
}

/// A vanishing certificate for the wheel on `t` vertices, `t` odd.
///
/// The hub comes first, then the odd rim vertices, then the even ones. Spokes
/// to odd rim vertices are red, spokes to even ones green, rim pairs blue.
pub fn wheel_vanishing(t: usize) -> Result<PaletteCertificate> {
    if t < 3 || t.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "vanishing wheel certificate needs odd t >= 3, got {t}"
        )));
    }
    let rim = t - 1;
    let mut order = vec![0];
    order.extend((1..=rim).step_by(2));
    order.extend((2..=rim).step_by(2));
    let mut coloring = BTreeMap::new();
    for i in 1..=rim {
        let spoke = if i % 2 == 1 { Color::Red } else { Color::Green };
        coloring.insert(pair(0, i), spoke);
        coloring.insert(pair(i, i % rim + 1), Color::Blue);
    }
    Ok(PaletteCertificate {
        kind: PropertyKind::Vanishing,
        ordering: VertexOrdering::new(order)?,
        istar: None,
        coloring,
    })
}

/// A SPADES certificate for the wheel on `t = 2m + 2` vertices.
///
/// Positions: hub at 1, odd rim vertices `v_1, v_3, ..., v_{2m-1}` at
/// `2..=m+1`, even rim vertices at `m+2..=2m+1`, `v_{2m+1}` last, and
/// `i* = 2m + 1`. Colors are assigned by position.
pub fn wheel_spades(t: usize) -> Result<PaletteCertificate> {
    if t < 4 || !t.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "spades wheel certificate needs even t >= 4, got {t}"
        )));
    }
    let m = (t - 2) / 2;
    let last = 2 * m + 2;
    let mut order = vec![0];
    order.extend((1..2 * m).step_by(2));
    order.extend((2..=2 * m).step_by(2));
    order.push(2 * m + 1);

    let mut by_position: BTreeMap<[usize; 2], Color> = BTreeMap::new();
    by_position.insert([1, last], Color::Red);
    for l in 2..=m + 1 {
        by_position.insert([1, l], Color::Green);
    }
    for l in m + 2..=2 * m + 1 {
        by_position.insert([1, l], Color::Blue);
    }
    by_position.insert([2 * m + 1, last], Color::Violet);
    for l in 2..=m {
        by_position.insert([l, l + m], Color::Cyan);
        by_position.insert([l + 1, l + m], Color::Cyan);
    }
    by_position.insert([m + 1, 2 * m + 1], Color::Cyan);
    by_position.insert([2, last], Color::Black);

    let ordering = VertexOrdering::new(order)?;
    let coloring = by_position
        .into_iter()
        .map(|([p, q], c)| (pair(ordering.vertex_at(p - 1), ordering.vertex_at(q - 1)), c))
        .collect();
    Ok(PaletteCertificate {
        kind: PropertyKind::Spades,
        ordering,
        istar: Some(2 * m + 1),
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, Named};

    #[test]
    fn f7star_hat_accepted() {
        let g = build(&Named::F7StarHat).unwrap();
        for kind in [PropertyKind::Spades, PropertyKind::SpadesStar] {
            let v = f7star_hat(kind).unwrap().verify(&g).unwrap();
            assert!(v.is_accept(), "{kind}: {v:?}");
        }
        assert!(f7star_hat(PropertyKind::Clubs).is_err());
    }

    #[test]
    fn wheels_accepted() {
        for t in (3..=11).step_by(2) {
            let g = build(&Named::Wheel(t)).unwrap();
            assert!(wheel_vanishing(t).unwrap().verify(&g).unwrap().is_accept(), "W_{t}");
        }
        for t in (4..=12).step_by(2) {
            let g = build(&Named::Wheel(t)).unwrap();
            assert!(wheel_spades(t).unwrap().verify(&g).unwrap().is_accept(), "W_{t}");
        }
        assert!(wheel_vanishing(4).is_err());
        assert!(wheel_spades(5).is_err());
    }
}
