use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::interval::{membership_interval, Endpoint};
use super::lattice::{LatticeBox, SmallConstraint};
use super::EhrhartError;
use crate::exact_math::Rational;
use crate::polytope::Polytope;

/// A maximal constant piece of a step function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
    pub value: u64,
}

impl Piece {
    pub fn contains(&self, s: &Rational) -> bool {
        (s > &self.lo || (self.lo_closed && s == &self.lo))
            && (s < &self.hi || (self.hi_closed && s == &self.hi))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Exact `s ↦ L_P(s)` (or `L_{P°}(s)`) on `[0, s_max]`.
///
/// Pieces partition `[0, s_max]` in order and adjacent pieces carry
/// different values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFunction {
    s_max: Rational,
    interior: bool,
    pieces: Vec<Piece>,
}

impl StepFunction {
    pub fn s_max(&self) -> &Rational {
        &self.s_max
    }

    /// Whether this counts the relative interior.
    pub fn is_interior(&self) -> bool {
        self.interior
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    fn piece_index(&self, s: &Rational) -> Option<usize> {
        if s.is_negative() || s > &self.s_max {
            return None;
        }
        let idx = self
            .pieces
            .partition_point(|p| p.hi < *s || (p.hi == *s && !p.hi_closed));
        (idx < self.pieces.len()).then_some(idx)
    }

    pub fn value_at(&self, s: &Rational) -> Option<u64> {
        self.piece_index(s).map(|i| self.pieces[i].value)
    }

    /// The constant value on `(s, s + ε)` for small `ε > 0`; `None` when
    /// `s` is outside `[0, s_max)`.
    pub fn value_right_of(&self, s: &Rational) -> Option<u64> {
        if s.is_negative() || s >= &self.s_max {
            return None;
        }
        let idx = self.pieces.partition_point(|p| p.hi <= *s);
        self.pieces.get(idx).map(|p| p.value)
    }

    /// Distinct piece endpoints, ascending.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .pieces
            .iter()
            .flat_map(|p| [p.lo.clone(), p.hi.clone()])
            .collect();
        out.dedup();
        out
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.pieces.windows(2).all(|w| w[0].value <= w[1].value)
    }
}

/// `[lo, hi]` with closedness; `hi = None` means unbounded.
#[derive(Debug, Clone)]
struct Span {
    lo: Rational,
    lo_closed: bool,
    hi: Option<(Rational, bool)>,
}

/// `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy)]
struct SmallFrac {
    num: i128,
    den: i128,
}

impl SmallFrac {
    fn checked_cmp(self, other: Self) -> Option<Ordering> {
        let l = self.num.checked_mul(other.den)?;
        let r = other.num.checked_mul(self.den)?;
        Some(l.cmp(&r))
    }

    fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

enum FastOutcome {
    Overflow,
    Empty,
    Span(SmallFrac, bool, Option<(SmallFrac, bool)>),
}

fn fast_span(constraints: &[SmallConstraint], x: &[i64]) -> FastOutcome {
    let mut lo = (SmallFrac { num: 0, den: 1 }, false);
    let mut hi: Option<(SmallFrac, bool)> = None;
    for c in constraints {
        let Some(v) = c.dot(x) else {
            return FastOutcome::Overflow;
        };
        let closed = !c.strict;
        match c.offset.cmp(&0) {
            Ordering::Greater => {
                let bound = SmallFrac {
                    num: v,
                    den: c.offset as i128,
                };
                match bound.checked_cmp(lo.0) {
                    None => return FastOutcome::Overflow,
                    Some(Ordering::Greater) => lo = (bound, closed),
                    Some(Ordering::Equal) => lo.1 &= closed,
                    Some(Ordering::Less) => {}
                }
            }
            Ordering::Less => {
                let Some(num) = v.checked_neg() else {
                    return FastOutcome::Overflow;
                };
                let bound = SmallFrac {
                    num,
                    den: -(c.offset as i128),
                };
                match hi {
                    None => hi = Some((bound, closed)),
                    Some((cur, cur_closed)) => match bound.checked_cmp(cur) {
                        None => return FastOutcome::Overflow,
                        Some(Ordering::Less) => hi = Some((bound, closed)),
                        Some(Ordering::Equal) => hi = Some((cur, cur_closed && closed)),
                        Some(Ordering::Greater) => {}
                    },
                }
            }
            Ordering::Equal => {
                if v > 0 || (c.strict && v == 0) {
                    return FastOutcome::Empty;
                }
            }
        }
    }
    if let Some((h, h_closed)) = hi {
        match lo.0.checked_cmp(h) {
            None => return FastOutcome::Overflow,
            Some(Ordering::Greater) => return FastOutcome::Empty,
            Some(Ordering::Equal) if !(lo.1 && h_closed) => return FastOutcome::Empty,
            _ => {}
        }
    }
    FastOutcome::Span(lo.0, lo.1, hi)
}

fn exact_span(p: &Polytope, x: &[i64], strict: bool) -> Option<Span> {
    let point = x.iter().map(|&c| BigInt::from(c)).collect();
    let m = membership_interval(p, &point, strict);
    if m.is_empty() {
        return None;
    }
    let Endpoint::Finite {
        value: lo,
        closed: lo_closed,
    } = m.lo
    else {
        unreachable!("membership intervals start at s = 0");
    };
    let hi = match m.hi {
        Endpoint::Unbounded => None,
        Endpoint::Finite { value, closed } => Some((value, closed)),
    };
    Some(Span { lo, lo_closed, hi })
}

/// Candidate points: the integer box around `conv({0} ∪ s_max P)`, which
/// contains every `sP` with `0 <= s <= s_max`.
fn candidate_box(p: &Polytope, s_max: &Rational) -> Result<LatticeBox, EhrhartError> {
    let bounds: Vec<(Rational, Rational)> = p
        .vertex_bounds()
        .into_iter()
        .map(|(lo, hi)| {
            let lo = lo * s_max;
            let hi = hi * s_max;
            (lo.min(Rational::zero()), hi.max(Rational::zero()))
        })
        .collect();
    LatticeBox::around(&bounds)
}

/// The exact lattice-point enumerator of `sP` (or of its relative interior
/// when `strict`) on `[0, s_max]`, with `L_P(0) = 1` and `L_{P°}(0) = 0`.
pub fn step_function(
    p: &Polytope,
    s_max: &Rational,
    strict: bool,
) -> Result<StepFunction, EhrhartError> {
    if !s_max.is_positive() {
        return Err(EhrhartError::NonPositiveSMax);
    }
    let at_zero = u64::from(!strict);
    if p.is_empty() {
        return Ok(sweep(&[], s_max, at_zero, strict));
    }
    let candidates = candidate_box(p, s_max)?;
    let small: Option<Vec<SmallConstraint>> = p
        .halfspaces()
        .iter()
        .enumerate()
        .map(|(i, h)| SmallConstraint::from_halfspace(h, strict && !p.is_implicit_equality(i)))
        .collect();
    let spans: Vec<Span> = candidates
        .first_axis()
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut local = Vec::new();
            candidates.for_each_with_first(first, |x| {
                let span = match &small {
                    Some(cs) => match fast_span(cs, x) {
                        FastOutcome::Empty => None,
                        FastOutcome::Span(lo, lo_closed, hi) => Some(Span {
                            lo: lo.to_rational(),
                            lo_closed,
                            hi: hi.map(|(h, c)| (h.to_rational(), c)),
                        }),
                        FastOutcome::Overflow => exact_span(p, x, strict),
                    },
                    None => exact_span(p, x, strict),
                };
                if let Some(span) = span {
                    if span.lo < *s_max || (span.lo == *s_max && span.lo_closed) {
                        local.push(span);
                    }
                }
            });
            local
        })
        .collect();
    Ok(sweep(&spans, s_max, at_zero, strict))
}

/// Turns membership spans into maximal constant pieces.
///
/// With breakpoints `0 < t_1 < ... < t_m = s_max`, the atoms are `{0}`,
/// then alternately the open gap `(t_{j-1}, t_j)` and the point `{t_j}`.
/// Each span covers a contiguous run of atoms, counted with a difference
/// array.
fn sweep(spans: &[Span], s_max: &Rational, at_zero: u64, interior: bool) -> StepFunction {
    let zero = Rational::zero();
    let mut ts: Vec<Rational> = spans
        .iter()
        .flat_map(|s| std::iter::once(&s.lo).chain(s.hi.as_ref().map(|(h, _)| h)))
        .filter(|t| **t > zero && *t < s_max)
        .cloned()
        .collect();
    ts.push(s_max.clone());
    ts.sort();
    ts.dedup();
    let atoms = 2 * ts.len() + 1;
    let last = atoms - 1;
    let index = |t: &Rational| ts.binary_search(t).expect("endpoint is a breakpoint");
    let mut diff = vec![0i64; atoms + 1];
    for span in spans {
        let start = if span.lo.is_zero() {
            1
        } else {
            let j = index(&span.lo);
            if span.lo_closed {
                2 * j + 2
            } else {
                2 * j + 3
            }
        };
        let end = match &span.hi {
            None => last,
            Some((h, _)) if h > s_max => last,
            Some((h, _)) if !h.is_positive() => continue,
            Some((h, closed)) => {
                let j = index(h);
                if *closed {
                    2 * j + 2
                } else {
                    2 * j + 1
                }
            }
        };
        if start <= end {
            diff[start] += 1;
            diff[end + 1] -= 1;
        }
    }
    let mut pieces: Vec<Piece> = Vec::new();
    let mut running = 0i64;
    for atom in 0..atoms {
        running += diff[atom];
        let value = if atom == 0 { at_zero } else { running as u64 };
        let (lo, lo_closed, hi, hi_closed) = if atom == 0 {
            (zero.clone(), true, zero.clone(), true)
        } else if atom % 2 == 1 {
            let j = atom / 2;
            let lo = if j == 0 {
                zero.clone()
            } else {
                ts[j - 1].clone()
            };
            (lo, false, ts[j].clone(), false)
        } else {
            let t = ts[atom / 2 - 1].clone();
            (t.clone(), true, t, true)
        };
        match pieces.last_mut() {
            Some(prev) if prev.value == value => {
                prev.hi = hi;
                prev.hi_closed = hi_closed;
            }
            _ => pieces.push(Piece {
                lo,
                lo_closed,
                hi,
                hi_closed,
                value,
            }),
        }
    }
    StepFunction {
        s_max: s_max.clone(),
        interior,
        pieces,
    }
}
