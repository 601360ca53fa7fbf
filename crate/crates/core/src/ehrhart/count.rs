use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::lattice::{LatticeBox, SmallConstraint};
use super::EhrhartError;
use crate::exact_math::{Integer, Rational};
use crate::polytope::{HalfSpace, Polytope};

/// `#(sP ∩ Z^d)` (relative interior when `strict`) by direct enumeration of
/// the integer box around `sP`. Independent of [`super::step_function`].
pub fn count(p: &Polytope, s: &Rational, strict: bool) -> Result<u64, EhrhartError> {
    if s.is_negative() {
        return Err(EhrhartError::NegativeDilation);
    }
    if s.is_zero() {
        return Ok(u64::from(!strict));
    }
    if p.is_empty() {
        return Ok(0);
    }
    // x ∈ sP  <=>  <a, x> <= s b, scaled to integer coefficients
    let dilated: Vec<(Vec<Integer>, Integer, bool)> = p
        .halfspaces()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let scaled = HalfSpace::new(h.normal().to_vec(), h.offset() * s).expect("nonzero");
            let (a, b) = scaled.integerized();
            (a, b, strict && !p.is_implicit_equality(i))
        })
        .collect();
    let small: Option<Vec<SmallConstraint>> = dilated
        .iter()
        .map(|(a, b, st)| SmallConstraint::from_integers(a, b, *st))
        .collect();
    let bounds: Vec<(Rational, Rational)> = p
        .vertex_bounds()
        .into_iter()
        .map(|(lo, hi)| (lo * s, hi * s))
        .collect();
    let lattice = LatticeBox::around(&bounds)?;
    let total = lattice
        .first_axis()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut n = 0u64;
            lattice.for_each_with_first(first, |x| {
                let inside = small
                    .as_deref()
                    .and_then(|cs| small_inside(cs, x))
                    .unwrap_or_else(|| big_inside(&dilated, x));
                n += u64::from(inside);
            });
            n
        })
        .sum();
    Ok(total)
}

fn small_inside(constraints: &[SmallConstraint], x: &[i64]) -> Option<bool> {
    for c in constraints {
        let v = c.dot(x)?;
        let ok = if c.strict {
            v < c.offset as i128
        } else {
            v <= c.offset as i128
        };
        if !ok {
            return Some(false);
        }
    }
    Some(true)
}

fn big_inside(constraints: &[(Vec<Integer>, Integer, bool)], x: &[i64]) -> bool {
    constraints.iter().all(|(a, b, strict)| {
        let v: BigInt = a.iter().zip(x).map(|(ai, &xi)| ai * xi).sum();
        if *strict {
            &v < b
        } else {
            &v <= b
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;
    use crate::polytope::fixtures::*;

    #[test]
    fn small_examples() {
        assert_eq!(count(&cross2(), &rat(1, 1), false).unwrap(), 5);
        assert_eq!(count(&simplex2(), &rat(1, 1), false).unwrap(), 3);
        assert_eq!(count(&unit_square(), &rat(0, 1), false).unwrap(), 1);
        assert_eq!(
            count(&interval(rat(1, 1), rat(2, 1)), &rat(0, 1), false).unwrap(),
            1
        );
        assert_eq!(count(&unit_square(), &rat(0, 1), true).unwrap(), 0);
        assert_eq!(count(&unit_square(), &rat(3, 1), true).unwrap(), 4);
        assert_eq!(count(&unit_square(), &rat(5, 2), false).unwrap(), 9);
    }

    #[test]
    fn negative_dilation() {
        assert_eq!(
            count(&unit_square(), &rat(-1, 2), false),
            Err(EhrhartError::NegativeDilation)
        );
    }

    #[test]
    fn big_and_small_agree() {
        let p = interval(rat(-7, 3), rat(5, 2));
        let s = rat(3, 2);
        let dilated: Vec<_> = p
            .halfspaces()
            .iter()
            .map(|h| {
                let (a, b) = HalfSpace::new(h.normal().to_vec(), h.offset() * &s)
                    .unwrap()
                    .integerized();
                (a, b, false)
            })
            .collect();
        let big = (-10..=10).filter(|&x| big_inside(&dilated, &[x])).count() as u64;
        assert_eq!(count(&p, &s, false).unwrap(), big);
    }
}
