use num_traits::{One, Zero};

use super::{HRep, HalfSpace, VRep};
use crate::exact_math::Rational;

/// `P* = {x : <v, x> <= 1 for every vertex v}`. The zero vertex gives the
/// vacuous `0 <= 1` and is skipped. The result is bounded iff the origin is
/// interior to `P`; callers check with [`super::is_bounded`].
pub fn polar_dual(v: &VRep) -> HRep {
    let halfspaces = v
        .vertices()
        .iter()
        .filter(|x| !x.iter().all(Zero::is_zero))
        .map(|x| HalfSpace::new(x.clone(), Rational::one()).expect("nonzero vertex"))
        .collect();
    HRep::new(v.dim(), halfspaces).expect("vertex dimension")
}
