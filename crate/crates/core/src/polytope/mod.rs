//! H- and V-representations of rational polytopes.
//!
//! [`HRep`] is a raw list of inequalities `<a, x> <= b`; it may describe an
//! unbounded or empty set. [`Polytope`] is a validated, bounded H-rep with
//! its vertex set attached. Most of the crate works on `Polytope`.

mod dual;
mod facets;
mod fourier_motzkin;
mod projection;
mod vertices;

pub use dual::polar_dual;
pub use facets::{affine_dimension, minimal_facets};
pub use fourier_motzkin::{is_bounded, is_feasible};
pub use projection::{lattice_project, LatticeProjection};
pub(crate) use vertices::combinations;
pub use vertices::enumerate_vertices;

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact_math::{
    dot, int_vector_to_rat, is_integral_vector, lcm_of_denominators, primitive_integer_vector,
    IntVector, Integer, MathError, RatVector, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("ambient dimension must be positive")]
    ZeroDimension,
    #[error("half-space normal must be nonzero")]
    ZeroNormal,
    #[error("the inequalities describe an unbounded set")]
    Unbounded,
    #[error("the polytope is empty")]
    Empty,
    #[error("the polytope is not full-dimensional (affine dimension {affine} < {ambient})")]
    NotFullDimensional { affine: usize, ambient: usize },
    #[error("the polytope does not contain the origin")]
    OriginNotContained,
    #[error(transparent)]
    Math(#[from] MathError),
}

/// One inequality `<normal, x> <= offset`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    normal: RatVector,
    offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: RatVector, offset: Rational) -> Result<Self, PolytopeError> {
        if normal.iter().all(Zero::is_zero) {
            return Err(PolytopeError::ZeroNormal);
        }
        Ok(Self { normal, offset })
    }

    pub fn from_integers(normal: &[i64], offset: Rational) -> Result<Self, PolytopeError> {
        Self::new(
            normal
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
            offset,
        )
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    pub fn is_satisfied(&self, x: &[Rational], strict: bool) -> bool {
        let lhs = self.evaluate(x);
        if strict {
            lhs < self.offset
        } else {
            lhs <= self.offset
        }
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.evaluate(x) == self.offset
    }

    pub fn has_integral_normal(&self) -> bool {
        is_integral_vector(&self.normal)
    }

    /// Rescales by a positive factor so the normal is a primitive integer
    /// vector. Two inequalities describe the same half-space iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let normal = primitive_integer_vector(&self.normal).expect("normal is nonzero");
        let factor = &normal
            .iter()
            .zip(&self.normal)
            .find(|(_, a)| !a.is_zero())
            .map(|(n, a)| Rational::from_integer(n.clone()) / a)
            .expect("normal is nonzero");
        Self {
            normal: int_vector_to_rat(&normal),
            offset: &self.offset * factor,
        }
    }

    /// The same inequality multiplied by a positive integer so every
    /// coefficient, including the offset, is an integer.
    pub fn integerized(&self) -> (IntVector, Integer) {
        let scale = lcm_of_denominators(self.normal.iter().chain(std::iter::once(&self.offset)));
        let scale_int = |x: &Rational| x.numer() * (&scale / x.denom());
        (
            self.normal.iter().map(scale_int).collect(),
            scale_int(&self.offset),
        )
    }
}

impl fmt::Debug for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<(")?;
        for (i, a) in self.normal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "), x> <= {}", self.offset)
    }
}

/// A finite conjunction of half-spaces in a fixed ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HRep {
    /// Checks shapes only; see [`make_hrep`] for full validation.
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self, PolytopeError> {
        if dim == 0 {
            return Err(PolytopeError::ZeroDimension);
        }
        if let Some(bad) = halfspaces.iter().find(|h| h.dim() != dim) {
            return Err(PolytopeError::DimensionMismatch {
                expected: dim,
                actual: bad.dim(),
            });
        }
        Ok(Self { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    /// Plain conjunction of `<a_i, x> <= b_i` (or `<` everywhere when
    /// `strict`).
    pub fn contains(&self, x: &[Rational], strict: bool) -> Result<bool, PolytopeError> {
        self.check_point(x)?;
        Ok(self.halfspaces.iter().all(|h| h.is_satisfied(x, strict)))
    }

    fn check_point(&self, x: &[Rational]) -> Result<(), PolytopeError> {
        if x.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch {
                expected: self.dim,
                actual: x.len(),
            });
        }
        Ok(())
    }
}

/// Vertex list, pairwise distinct and lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    dim: usize,
    vertices: Vec<RatVector>,
}

impl VRep {
    pub fn new(dim: usize, mut vertices: Vec<RatVector>) -> Result<Self, PolytopeError> {
        if let Some(bad) = vertices.iter().find(|v| v.len() != dim) {
            return Err(PolytopeError::DimensionMismatch {
                expected: dim,
                actual: bad.len(),
            });
        }
        vertices.sort();
        vertices.dedup();
        Ok(Self { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| is_integral_vector(v))
    }
}

/// A validated rational polytope: bounded, with its exact vertex set.
///
/// The empty set is a flagged value rather than an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    hrep: HRep,
    vrep: VRep,
    empty: bool,
    /// Constraints tight on all of `P`; these stay non-strict when taking
    /// the relative interior.
    implicit_equalities: Vec<bool>,
}

/// Validates an H-representation: shapes, nonemptiness, boundedness.
pub fn make_hrep(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Polytope, PolytopeError> {
    Polytope::new(HRep::new(dim, halfspaces)?)
}

impl Polytope {
    pub fn new(hrep: HRep) -> Result<Self, PolytopeError> {
        let dim = hrep.dim;
        if !is_feasible(&hrep) {
            return Ok(Self {
                implicit_equalities: vec![true; hrep.len()],
                hrep,
                vrep: VRep::new(dim, Vec::new())?,
                empty: true,
            });
        }
        if !is_bounded(&hrep) {
            return Err(PolytopeError::Unbounded);
        }
        let vrep = vertices::vertices_of_bounded(&hrep)?;
        let implicit_equalities = hrep
            .halfspaces
            .iter()
            .map(|h| vrep.vertices.iter().all(|v| h.is_tight(v)))
            .collect();
        Ok(Self {
            hrep,
            vrep,
            empty: false,
            implicit_equalities,
        })
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.hrep.halfspaces
    }

    pub fn vrep(&self) -> &VRep {
        &self.vrep
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vrep.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn is_implicit_equality(&self, index: usize) -> bool {
        self.implicit_equalities[index]
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.empty && affine_dimension(self).is_ok_and(|d| d == self.dim())
    }

    /// Membership in `P` or, with `strict`, in its relative interior: every
    /// constraint that is not an implicit equality of `P` must hold strictly.
    /// For full-dimensional `P` this is the usual interior.
    pub fn contains(&self, x: &[Rational], strict: bool) -> Result<bool, PolytopeError> {
        self.hrep.check_point(x)?;
        if self.empty {
            return Ok(false);
        }
        Ok(self
            .hrep
            .halfspaces
            .iter()
            .zip(&self.implicit_equalities)
            .all(|(h, &eq)| h.is_satisfied(x, strict && !eq)))
    }

    /// Topological interior, `<a_i, x> < b_i` for every `i`. Empty for
    /// polytopes that are not full-dimensional.
    pub fn contains_in_interior(&self, x: &[Rational]) -> Result<bool, PolytopeError> {
        if self.empty {
            self.hrep.check_point(x)?;
            return Ok(false);
        }
        self.hrep.contains(x, true)
    }

    pub fn contains_origin(&self) -> bool {
        let zero = vec![Rational::zero(); self.dim()];
        self.contains(&zero, false).expect("dimension matches")
    }

    pub fn origin_in_interior(&self) -> bool {
        let zero = vec![Rational::zero(); self.dim()];
        self.contains_in_interior(&zero).expect("dimension matches")
    }

    /// Per-coordinate `(min, max)` over the vertices.
    pub fn vertex_bounds(&self) -> Vec<(Rational, Rational)> {
        (0..self.dim())
            .map(|j| {
                let mut coords = self.vertices().iter().map(|v| &v[j]);
                let first = coords.next().cloned().unwrap_or_else(Rational::zero);
                coords.fold((first.clone(), first), |(lo, hi), c| {
                    (
                        if c < &lo { c.clone() } else { lo },
                        if c > &hi { c.clone() } else { hi },
                    )
                })
            })
            .collect()
    }

    pub fn has_integral_vertices(&self) -> bool {
        self.vrep.is_integral()
    }

    /// True if some constraint has a negative offset.
    pub fn has_negative_offset(&self) -> bool {
        self.halfspaces().iter().any(|h| h.offset().is_negative())
    }
}

/// Membership test for the primary contract; see [`Polytope::contains`].
pub fn contains(p: &Polytope, point: &[Rational], strict: bool) -> Result<bool, PolytopeError> {
    p.contains(point, strict)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exact_math::rat;

    #[test]
    fn make_hrep_examples() {
        let seg = make_hrep(1, vec![hs(&[1], rat(1, 1)), hs(&[-1], rat(0, 1))]).unwrap();
        assert!(!seg.is_empty());
        assert_eq!(seg.vertices(), &[vec![rat(0, 1)], vec![rat(1, 1)]]);

        assert_eq!(
            make_hrep(2, vec![hs(&[1, 0], rat(1, 1))]),
            Err(PolytopeError::Unbounded)
        );

        let empty = make_hrep(1, vec![hs(&[1], rat(-1, 1)), hs(&[-1], rat(0, 1))]).unwrap();
        assert!(empty.is_empty());
        assert!(empty.vertices().is_empty());
    }

    #[test]
    fn empty_takes_precedence_over_unbounded() {
        let p = make_hrep(2, vec![hs(&[1, 0], rat(1, 1)), hs(&[-1, 0], rat(-2, 1))]).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            HalfSpace::new(vec![rat(0, 1), rat(0, 1)], rat(1, 1)),
            Err(PolytopeError::ZeroNormal)
        );
        assert_eq!(
            HRep::new(2, vec![hs(&[1], rat(1, 1))]),
            Err(PolytopeError::DimensionMismatch {
                expected: 2,
                actual: 1
            })
        );
        assert_eq!(HRep::new(0, vec![]), Err(PolytopeError::ZeroDimension));
    }

    #[test]
    fn containment() {
        let sq = unit_square();
        assert!(sq.contains(&[rat(1, 2), rat(1, 2)], true).unwrap());
        assert!(!sq.contains(&[rat(1, 1), rat(0, 1)], true).unwrap());
        assert!(sq.contains(&[rat(1, 1), rat(0, 1)], false).unwrap());
        assert!(cross2().contains(&[rat(1, 2), rat(1, 2)], false).unwrap());
        assert!(matches!(
            sq.contains(&[rat(1, 1)], false),
            Err(PolytopeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn relative_interior_of_segment() {
        // diagonal segment (0,0)-(1,1)
        let seg = make_hrep(
            2,
            vec![
                hs(&[1, -1], rat(0, 1)),
                hs(&[-1, 1], rat(0, 1)),
                hs(&[1, 0], rat(1, 1)),
                hs(&[-1, 0], rat(0, 1)),
            ],
        )
        .unwrap();
        assert!(seg.contains(&[rat(1, 2), rat(1, 2)], true).unwrap());
        assert!(!seg.contains(&[rat(0, 1), rat(0, 1)], true).unwrap());
        assert!(!seg.contains_in_interior(&[rat(1, 2), rat(1, 2)]).unwrap());
        assert!(seg.is_implicit_equality(0) && seg.is_implicit_equality(1));
        assert!(!seg.is_implicit_equality(2));
    }

    #[test]
    fn canonical_scaling() {
        let h = HalfSpace::new(vec![rat(2, 3), rat(-4, 3)], rat(2, 1)).unwrap();
        let c = h.canonical();
        assert_eq!(c.normal(), &[rat(1, 1), rat(-2, 1)]);
        assert_eq!(c.offset(), &rat(3, 1));
        let (a, b) = HalfSpace::new(vec![rat(1, 2), rat(1, 3)], rat(1, 4))
            .unwrap()
            .integerized();
        assert_eq!(a, vec![Integer::from(6), Integer::from(4)]);
        assert_eq!(b, Integer::from(3));
    }
}
