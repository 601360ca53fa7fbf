use num_traits::Signed;

use super::ClassifyError;
use crate::exact_math::{
    dot, int_vector_to_rat, lcm_of_denominators, nullspace, primitive_integer_vector, rank,
    IntVector, RatMatrix, RatVector, Rational,
};
use crate::polytope::combinations;

/// Inward primitive normals of the facets of `cone(generators)`, i.e. the
/// `a` with `<a, x> >= 0` on the cone. Brute force over `(d-1)`-subsets.
pub fn cone_facets(generators: &[RatVector]) -> Result<Vec<IntVector>, ClassifyError> {
    let d = generators.first().map_or(0, Vec::len);
    if d == 0 || generators.iter().any(|g| g.len() != d) {
        return Err(ClassifyError::ConeNotFullDimensional);
    }
    if rank(&RatMatrix::from_rows(d, generators.to_vec()).expect("equal lengths")) < d {
        return Err(ClassifyError::ConeNotFullDimensional);
    }
    let mut facets: Vec<IntVector> = Vec::new();
    for subset in combinations(generators.len(), d - 1) {
        let rows: Vec<RatVector> = subset.iter().map(|&i| generators[i].clone()).collect();
        let m = RatMatrix::from_rows(d, rows).expect("equal lengths");
        if rank(&m) != d - 1 {
            continue;
        }
        let kernel = nullspace(&m);
        let normal = primitive_integer_vector(&kernel[0]).expect("kernel basis is nonzero");
        let normal_r = int_vector_to_rat(&normal);
        let signs: Vec<Rational> = generators.iter().map(|g| dot(&normal_r, g)).collect();
        let oriented = if signs.iter().all(|s| !s.is_negative()) {
            normal
        } else if signs.iter().all(|s| !s.is_positive()) {
            normal.into_iter().map(|x| -x).collect()
        } else {
            continue;
        };
        if !facets.contains(&oriented) {
            facets.push(oriented);
        }
    }
    Ok(facets)
}

/// Whether the open ball of radius `delta` around `x` lies in the cone with
/// the given inward facet normals, checked in squared form:
/// `<a, x> >= 0` and `<a, x>^2 >= delta^2 |a|^2` for every facet.
pub fn is_deep_point(facets: &[IntVector], x: &[Rational], delta: &Rational) -> bool {
    facets.iter().all(|a| {
        let a = int_vector_to_rat(a);
        let height = dot(&a, x);
        !height.is_negative() && &height * &height >= delta * delta * dot(&a, &a)
    })
}

/// An integer point `x` of the cone with `B_delta(x) ⊂ cone`: the sum of
/// the generators scaled by the least positive integer that makes it
/// integral and pushes it farther than `delta` from every facet.
pub fn cone_deep_point(
    generators: &[RatVector],
    delta: &Rational,
) -> Result<IntVector, ClassifyError> {
    if !delta.is_positive() {
        return Err(ClassifyError::NonPositiveDelta);
    }
    let facets = cone_facets(generators)?;
    let d = generators[0].len();
    let center: RatVector = (0..d)
        .map(|j| generators.iter().map(|g| &g[j]).sum())
        .collect();
    if facets.is_empty() {
        return Err(ClassifyError::ConeNotPointed);
    }
    // squared distance from the center to the nearest facet hyperplane
    let mut eps2: Option<Rational> = None;
    for a in &facets {
        let a = int_vector_to_rat(a);
        let height = dot(&a, &center);
        if !height.is_positive() {
            return Err(ClassifyError::ConeNotPointed);
        }
        let dist2 = &height * &height / dot(&a, &a);
        if eps2.as_ref().is_none_or(|e| &dist2 < e) {
            eps2 = Some(dist2);
        }
    }
    let eps2 = eps2.expect("at least one facet");
    let denom = lcm_of_denominators(&center);
    let denom_r = Rational::from_integer(denom.clone());
    // least k >= 1 with (k * denom)^2 * eps2 > delta^2
    let ratio = delta * delta / (&denom_r * &denom_r * eps2);
    let k = ratio.floor().to_integer().sqrt() + 1;
    let scale = Rational::from_integer(k * denom);
    Ok(center.iter().map(|c| (c * &scale).to_integer()).collect())
}
