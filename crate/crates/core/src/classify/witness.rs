//! Explicit lattice points that certify a failure of the floor property.

use num_traits::Signed;

use super::{cone_deep_point, ClassifyError};
use crate::exact_math::{
    dot, int_vector_to_rat, is_integral, lcm_of_denominators, IntVector, RatVector, Rational,
};
use crate::polytope::{minimal_facets, HalfSpace, Polytope};

/// An integer point `point` that lies in `dilation * P` on the facet
/// `facet`, together with the facet used to find it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationWitness {
    pub point: IntVector,
    pub dilation: Rational,
    pub facet: HalfSpace,
}

fn tight_vertices<'a>(p: &'a Polytope, h: &HalfSpace) -> Vec<&'a RatVector> {
    p.vertices().iter().filter(|v| h.is_tight(v)).collect()
}

/// For full-dimensional `P` not containing the origin: a lattice point on
/// the cone over a facet with negative offset. It enters the dilates at
/// `dilation` on that facet and leaves right after, so the count drops
/// there. `None` if `P` contains the origin or is not full-dimensional.
pub fn origin_outside_witness(p: &Polytope) -> Result<Option<DilationWitness>, ClassifyError> {
    if p.is_empty() || p.contains_origin() || !p.is_full_dimensional() {
        return Ok(None);
    }
    let facets = minimal_facets(p)?;
    let facet = facets
        .halfspaces()
        .iter()
        .find(|h| h.offset().is_negative())
        .expect("a full-dimensional polytope missing the origin violates a facet at 0")
        .clone();
    let verts = tight_vertices(p, &facet);
    let d = p.dim();
    // the vertex sum lies in the relative interior of the facet cone
    let sum: RatVector = (0..d).map(|j| verts.iter().map(|v| &v[j]).sum()).collect();
    let scale = Rational::from_integer(lcm_of_denominators(&sum));
    let point: IntVector = sum.iter().map(|c| (c * &scale).to_integer()).collect();
    let dilation = dot(facet.normal(), &int_vector_to_rat(&point)) / facet.offset();
    Ok(Some(DilationWitness {
        point,
        dilation,
        facet,
    }))
}

/// For full-dimensional `P` containing the origin with a facet whose
/// normalized normal `u = a/b` is not integral: an integer point `x` with
/// `s = <u, x>` non-integral, `x ∈ sP` and `x ∉ ⌊s⌋P`. Built from a point
/// at distance more than 3/2 from the walls of the facet cone, nudged by a
/// unit vector when needed. `None` if no such facet exists.
pub fn only_if_witness(p: &Polytope) -> Result<Option<DilationWitness>, ClassifyError> {
    if p.is_empty() || !p.contains_origin() || !p.is_full_dimensional() {
        return Ok(None);
    }
    let facets = minimal_facets(p)?;
    let found = facets.halfspaces().iter().find_map(|h| {
        if !h.offset().is_positive() {
            return None;
        }
        let u: RatVector = h.normal().iter().map(|a| a / h.offset()).collect();
        let j = u.iter().position(|c| !is_integral(c))?;
        Some((h.clone(), u, j))
    });
    let Some((facet, u, j)) = found else {
        return Ok(None);
    };
    let verts: Vec<RatVector> = tight_vertices(p, &facet).into_iter().cloned().collect();
    let mut point = cone_deep_point(&verts, &Rational::new(3.into(), 2.into()))?;
    let mut dilation = dot(&u, &int_vector_to_rat(&point));
    if is_integral(&dilation) {
        point[j] += 1;
        dilation = dot(&u, &int_vector_to_rat(&point));
    }
    debug_assert!(!is_integral(&dilation));
    Ok(Some(DilationWitness {
        point,
        dilation,
        facet,
    }))
}
