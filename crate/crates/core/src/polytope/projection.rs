use num_traits::Zero;

use super::{make_hrep, HRep, HalfSpace, Polytope, PolytopeError};
use crate::exact_math::{
    hermite_normal_form, int_vector_to_rat, inverse, primitive_integer_vector, rank, IntMatrix,
    IntVector, RatMatrix, RatVector, Rational,
};

/// A unimodular `U` with `U * span(P) = R^k x {0}`, and the image of `P`
/// in `R^k`.
///
/// Because `U` preserves `Z^d`, `#(sP ∩ Z^d) = #(sQ ∩ Z^k)` for every
/// `s >= 0`, where `Q` is the image.
#[derive(Debug, Clone)]
pub struct LatticeProjection {
    transform: IntMatrix,
    rank: usize,
    image: Option<Polytope>,
}

impl LatticeProjection {
    pub fn transform(&self) -> &IntMatrix {
        &self.transform
    }

    /// Dimension `k` of the image.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `None` when `P = {0}`; a zero-dimensional polytope has the constant
    /// lattice count 1.
    pub fn image(&self) -> Option<&Polytope> {
        self.image.as_ref()
    }

    pub fn project_point(&self, x: &[Rational]) -> RatVector {
        let u = RatMatrix::from_int(&self.transform);
        let mut y = u.mul_vector(x).expect("dimension matches");
        y.truncate(self.rank);
        y
    }

    /// Rows `k..d` of `U`; `P` lies in their common kernel.
    pub fn equations(&self) -> Vec<IntVector> {
        (self.rank..self.transform.rows())
            .map(|r| self.transform.row(r).to_vec())
            .collect()
    }

    /// Pulls `<c, y> <= b` on the image back to `<U_k^T c, x> <= b` on the
    /// ambient space. Integral `c` stays integral.
    pub fn lift(&self, h: &HalfSpace) -> HalfSpace {
        let d = self.transform.cols();
        let mut normal = vec![Rational::zero(); d];
        for (i, c) in h.normal().iter().enumerate() {
            for (j, n) in normal.iter_mut().enumerate() {
                *n += c * Rational::from_integer(self.transform.get(i, j).clone());
            }
        }
        HalfSpace::new(normal, h.offset().clone()).expect("U has full rank")
    }

    /// An ambient H-representation of `P` built from one on the image: the
    /// lifted inequalities plus each equation as a pair `±<u, x> <= 0`.
    pub fn lift_hrep(&self, image_rep: Option<&HRep>) -> HRep {
        let mut out: Vec<HalfSpace> = image_rep
            .map(|h| h.halfspaces().iter().map(|h| self.lift(h)).collect())
            .unwrap_or_default();
        for eq in self.equations() {
            let normal = int_vector_to_rat(&eq);
            let negated = normal.iter().map(|x| -x).collect();
            out.push(HalfSpace::new(normal, Rational::zero()).expect("row of unimodular"));
            out.push(HalfSpace::new(negated, Rational::zero()).expect("row of unimodular"));
        }
        HRep::new(self.transform.cols(), out).expect("ambient dimension")
    }
}

/// Maps a rational polytope containing the origin onto a full-dimensional
/// polytope with identical lattice counts, via the Hermite normal form of
/// an integer basis of its linear span.
pub fn lattice_project(p: &Polytope) -> Result<LatticeProjection, PolytopeError> {
    if p.is_empty() {
        return Err(PolytopeError::Empty);
    }
    if !p.contains_origin() {
        return Err(PolytopeError::OriginNotContained);
    }
    let d = p.dim();
    let mut basis: Vec<RatVector> = Vec::new();
    for v in p.vertices() {
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let mut candidate = basis.clone();
        candidate.push(v.clone());
        if rank(&RatMatrix::from_rows(d, candidate.clone())?) == candidate.len() {
            basis = candidate;
        }
    }
    let k = basis.len();
    if k == d {
        return Ok(LatticeProjection {
            transform: IntMatrix::identity(d),
            rank: d,
            image: Some(p.clone()),
        });
    }
    let columns: Vec<IntVector> = basis
        .iter()
        .map(|v| primitive_integer_vector(v))
        .collect::<Result<_, _>>()?;
    let b = IntMatrix::from_rows(d, columns)?.transpose();
    let (_, u) = hermite_normal_form(&b);
    let image = if k == 0 {
        None
    } else {
        let u_inv = inverse(&RatMatrix::from_int(&u))?.expect("unimodular");
        let w = u_inv.transpose();
        let mut halfspaces = Vec::new();
        for h in p.halfspaces() {
            let mut normal = w.mul_vector(h.normal())?;
            normal.truncate(k);
            if normal.iter().all(Zero::is_zero) {
                debug_assert!(*h.offset() >= Rational::zero());
                continue;
            }
            halfspaces.push(HalfSpace::new(normal, h.offset().clone())?);
        }
        Some(make_hrep(k, halfspaces)?)
    };
    Ok(LatticeProjection {
        transform: u,
        rank: k,
        image,
    })
}
