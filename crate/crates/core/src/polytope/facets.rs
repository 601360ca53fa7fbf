use super::{HRep, HalfSpace, Polytope, PolytopeError};
use crate::exact_math::{rank, RatMatrix, RatVector};

/// Rank of the differences `v_i - v_0`.
pub(crate) fn affine_rank(points: &[&RatVector]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    if rest.is_empty() {
        return 0;
    }
    let rows = rest
        .iter()
        .map(|v| v.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank(&RatMatrix::from_rows(first.len(), rows).expect("equal lengths"))
}

/// Dimension of the affine hull of the vertex set.
pub fn affine_dimension(p: &Polytope) -> Result<usize, PolytopeError> {
    if p.is_empty() {
        return Err(PolytopeError::Empty);
    }
    let refs: Vec<&RatVector> = p.vertices().iter().collect();
    Ok(affine_rank(&refs))
}

/// The facet-defining inequalities of a full-dimensional polytope, one per
/// facet, in first-occurrence order, each scaled to a primitive integer
/// normal.
pub fn minimal_facets(p: &Polytope) -> Result<HRep, PolytopeError> {
    let d = p.dim();
    let affine = affine_dimension(p)?;
    if affine < d {
        return Err(PolytopeError::NotFullDimensional { affine, ambient: d });
    }
    let mut out: Vec<HalfSpace> = Vec::new();
    for h in p.halfspaces() {
        let tight: Vec<&RatVector> = p.vertices().iter().filter(|v| h.is_tight(v)).collect();
        if tight.len() < d || affine_rank(&tight) != d - 1 {
            continue;
        }
        let c = h.canonical();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    HRep::new(d, out)
}
