use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::exact_math::{int_vector_to_rat, IntVector, Rational};
use crate::polytope::Polytope;

/// One end of a dilation interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Unbounded,
    Finite { value: Rational, closed: bool },
}

impl Endpoint {
    pub fn finite(value: Rational, closed: bool) -> Self {
        Self::Finite { value, closed }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Self::Unbounded => None,
            Self::Finite { value, .. } => Some(value),
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Self::Finite { closed: true, .. })
    }
}

/// The set of dilations `s > 0` with `x ∈ sP` (or `x` in the relative
/// interior of `sP`). It is an interval because each constraint
/// `<a, x> <= s b` is a ray in `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipInterval {
    pub point: IntVector,
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl MembershipInterval {
    fn empty(point: IntVector) -> Self {
        Self {
            point,
            lo: Endpoint::finite(Rational::zero(), false),
            hi: Endpoint::finite(Rational::zero(), false),
        }
    }

    pub fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (
                Endpoint::Finite {
                    value: lo,
                    closed: lc,
                },
                Endpoint::Finite {
                    value: hi,
                    closed: hc,
                },
            ) => match lo.cmp(hi) {
                Ordering::Greater => true,
                Ordering::Equal => !(*lc && *hc),
                Ordering::Less => false,
            },
            _ => false,
        }
    }

    pub fn contains(&self, s: &Rational) -> bool {
        let above = match &self.lo {
            Endpoint::Unbounded => true,
            Endpoint::Finite { value, closed } => s > value || (*closed && s == value),
        };
        let below = match &self.hi {
            Endpoint::Unbounded => true,
            Endpoint::Finite { value, closed } => s < value || (*closed && s == value),
        };
        above && below
    }
}

/// Raises `lo` to `(value, closed)` if that is tighter.
pub(crate) fn tighten_lo(lo: &mut Endpoint, value: Rational, closed: bool) {
    match lo {
        Endpoint::Unbounded => *lo = Endpoint::finite(value, closed),
        Endpoint::Finite {
            value: cur,
            closed: cur_closed,
        } => match value.cmp(cur) {
            Ordering::Greater => *lo = Endpoint::finite(value, closed),
            Ordering::Equal => *cur_closed &= closed,
            Ordering::Less => {}
        },
    }
}

pub(crate) fn tighten_hi(hi: &mut Endpoint, value: Rational, closed: bool) {
    match hi {
        Endpoint::Unbounded => *hi = Endpoint::finite(value, closed),
        Endpoint::Finite {
            value: cur,
            closed: cur_closed,
        } => match value.cmp(cur) {
            Ordering::Less => *hi = Endpoint::finite(value, closed),
            Ordering::Equal => *cur_closed &= closed,
            Ordering::Greater => {}
        },
    }
}

/// Exact `{s > 0 : x ∈ sP}`, constraint by constraint:
/// `b > 0` gives `s >= <a,x>/b`, `b < 0` gives `s <= <a,x>/b`, and `b = 0`
/// either keeps everything (`<a,x> <= 0`) or nothing. With `strict`, every
/// constraint except the implicit equalities of `P` becomes strict.
pub fn membership_interval(p: &Polytope, x: &IntVector, strict: bool) -> MembershipInterval {
    if p.is_empty() {
        return MembershipInterval::empty(x.clone());
    }
    let xr = int_vector_to_rat(x);
    let mut lo = Endpoint::finite(Rational::zero(), false);
    let mut hi = Endpoint::Unbounded;
    for (i, h) in p.halfspaces().iter().enumerate() {
        let strict_here = strict && !p.is_implicit_equality(i);
        let v = h.evaluate(&xr);
        let b = h.offset();
        if b.is_positive() {
            tighten_lo(&mut lo, v / b, !strict_here);
        } else if b.is_negative() {
            tighten_hi(&mut hi, v / b, !strict_here);
        } else {
            let ok = if strict_here {
                v.is_negative()
            } else {
                !v.is_positive()
            };
            if !ok {
                return MembershipInterval::empty(x.clone());
            }
        }
    }
    MembershipInterval {
        point: x.clone(),
        lo,
        hi,
    }
}
