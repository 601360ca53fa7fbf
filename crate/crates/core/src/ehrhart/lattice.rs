use num_traits::ToPrimitive;

use super::EhrhartError;
use crate::exact_math::{Integer, Rational};
use crate::polytope::HalfSpace;

/// Axis-aligned box of integer points `lo <= x <= hi`.
#[derive(Debug, Clone)]
pub(crate) struct LatticeBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl LatticeBox {
    /// Smallest integer box containing `[min_j, max_j]` in every coordinate.
    pub fn around(bounds: &[(Rational, Rational)]) -> Result<Self, EhrhartError> {
        let mut lo = Vec::with_capacity(bounds.len());
        let mut hi = Vec::with_capacity(bounds.len());
        for (min, max) in bounds {
            lo.push(
                min.floor()
                    .to_integer()
                    .to_i64()
                    .ok_or(EhrhartError::TooLarge)?,
            );
            hi.push(
                max.ceil()
                    .to_integer()
                    .to_i64()
                    .ok_or(EhrhartError::TooLarge)?,
            );
        }
        Ok(Self { lo, hi })
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    pub fn first_axis(&self) -> std::ops::RangeInclusive<i64> {
        if self.is_empty() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.lo[0]..=self.hi[0]
    }

    /// Visits every point whose first coordinate is `first`, in
    /// lexicographic order.
    pub fn for_each_with_first(&self, first: i64, mut f: impl FnMut(&[i64])) {
        if self.is_empty() {
            return;
        }
        let d = self.lo.len();
        let mut x = self.lo.clone();
        x[0] = first;
        loop {
            f(&x);
            let mut axis = d;
            loop {
                if axis == 1 {
                    return;
                }
                axis -= 1;
                if x[axis] < self.hi[axis] {
                    x[axis] += 1;
                    break;
                }
                x[axis] = self.lo[axis];
            }
        }
    }
}

/// An inequality with machine-integer coefficients; `strict` selects `<`.
#[derive(Debug, Clone)]
pub(crate) struct SmallConstraint {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub strict: bool,
}

impl SmallConstraint {
    /// `None` if a coefficient does not fit in an `i64`.
    pub fn from_integers(normal: &[Integer], offset: &Integer, strict: bool) -> Option<Self> {
        Some(Self {
            normal: normal
                .iter()
                .map(ToPrimitive::to_i64)
                .collect::<Option<_>>()?,
            offset: offset.to_i64()?,
            strict,
        })
    }

    pub fn from_halfspace(h: &HalfSpace, strict: bool) -> Option<Self> {
        let (a, b) = h.integerized();
        Self::from_integers(&a, &b, strict)
    }

    /// `<normal, x>`, or `None` on overflow.
    pub fn dot(&self, x: &[i64]) -> Option<i128> {
        self.normal.iter().zip(x).try_fold(0i128, |acc, (&a, &b)| {
            acc.checked_add((a as i128).checked_mul(b as i128)?)
        })
    }
}
