use serde::Serialize;

/// The root of `(2 - x)^3 = 27 x` in `[0.2, 0.25]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DStar {
    pub value: f64,
    /// `|(2 - value)^3 - 27 value|`.
    pub residual: f64,
}

pub(crate) fn cubic(x: f64) -> f64 {
    (2.0 - x).powi(3) - 27.0 * x
}

/// Bisection on `[0.2, 0.25]`, where the cubic is decreasing and changes sign.
pub fn d_star() -> DStar {
    let (mut lo, mut hi) = (0.2_f64, 0.25_f64);
    debug_assert!(cubic(lo) > 0.0 && cubic(hi) < 0.0);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if cubic(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = if cubic(lo).abs() <= cubic(hi).abs() { lo } else { hi };
    DStar {
        value,
        residual: cubic(value).abs(),
    }
}
