use num_traits::{One, Zero};

use super::step::{Piece, StepFunction};
use crate::exact_math::Rational;

/// Outcome of a floor/ceiling check on `[0, s_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    /// A dilation where the property fails: the first point of the earliest
    /// offending piece when that point belongs to it, otherwise the midpoint
    /// of the offending stretch.
    pub witness: Option<Rational>,
}

impl PropertyCheck {
    fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: Rational) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

/// First point of `piece ∩ window`, where the window starts at `start`
/// (`start_closed` tells whether `start` itself is in the window) and ends
/// at `end` (exclusive for the floor window, inclusive for the ceiling one).
fn first_point(piece: &Piece, start: &Rational, start_closed: bool, end: &Rational) -> Rational {
    let (lower, closed) = match piece.lo.cmp(start) {
        std::cmp::Ordering::Greater => (&piece.lo, piece.lo_closed),
        std::cmp::Ordering::Less => (start, start_closed),
        std::cmp::Ordering::Equal => (start, start_closed && piece.lo_closed),
    };
    if closed {
        lower.clone()
    } else {
        midpoint(lower, end.min(&piece.hi))
    }
}

/// Whether `f` is constant on every `[k, k+1) ∩ [0, s_max]`, i.e.
/// `f(s) = f(floor s)`.
pub fn floor_property(f: &StepFunction) -> PropertyCheck {
    for piece in f.pieces() {
        let first = piece.lo.floor();
        let last = if piece.hi.is_integer() && !piece.hi_closed {
            &piece.hi - Rational::one()
        } else {
            piece.hi.floor()
        };
        let mut k = first;
        while k <= last {
            let reference = f.value_at(&k).expect("k <= s_max");
            if reference != piece.value {
                let next = &k + Rational::one();
                return PropertyCheck::fail(first_point(piece, &k, true, &next));
            }
            k += Rational::one();
        }
    }
    PropertyCheck::pass()
}

/// Whether `f` is constant on every `(k-1, k] ∩ (0, s_max]`, i.e.
/// `f(s) = f(ceil s)` for `s > 0`. A partial last window is compared with
/// `f(s_max)`.
pub fn ceil_property(f: &StepFunction) -> PropertyCheck {
    for piece in f.pieces() {
        if piece.hi.is_zero() {
            continue;
        }
        let first = if piece.lo.is_integer() && (!piece.lo_closed || piece.lo.is_zero()) {
            &piece.lo + Rational::one()
        } else {
            piece.lo.ceil()
        };
        let last = piece.hi.ceil();
        let mut k = first;
        while k <= last {
            let reference = f
                .value_at(if &k > f.s_max() { f.s_max() } else { &k })
                .expect("within range");
            if reference != piece.value {
                let start = &k - Rational::one();
                return PropertyCheck::fail(first_point(piece, &start, false, &k));
            }
            k += Rational::one();
        }
    }
    PropertyCheck::pass()
}

/// Every `s_0 ∈ (0, s_max)` with `f(s_0) > f(s_0 + ε)` for small `ε > 0`.
pub fn drop_points(f: &StepFunction) -> Vec<Rational> {
    f.breakpoints()
        .into_iter()
        .filter(|t| !t.is_zero() && t < f.s_max())
        .filter(|t| {
            let here = f.value_at(t).expect("in range");
            let after = f.value_right_of(t).expect("in range");
            here > after
        })
        .collect()
}
