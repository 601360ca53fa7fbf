use num_traits::Signed;

use super::{is_semi_reflexive_structural, ClassifyError};
use crate::exact_math::{is_integral_vector, Rational};
use crate::polytope::{is_bounded, minimal_facets, polar_dual, Polytope, PolytopeError};

/// `P*`, or `None` when it is unbounded (origin not interior to `P`).
pub fn polar_dual_polytope(p: &Polytope) -> Result<Option<Polytope>, ClassifyError> {
    let rep = polar_dual(p.vrep());
    if rep.is_empty() || !is_bounded(&rep) {
        return Ok(None);
    }
    Ok(Some(Polytope::new(rep)?))
}

/// Integral vertices, origin in the interior, and an integral polar dual.
pub fn is_reflexive(p: &Polytope) -> Result<bool, ClassifyError> {
    if p.is_empty() || !p.has_integral_vertices() || !p.origin_in_interior() {
        return Ok(false);
    }
    Ok(polar_dual_polytope(p)?.is_some_and(|d| d.has_integral_vertices()))
}

/// The three reflexivity predicates evaluated side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    /// Integral `P` and `P*`.
    pub reflexive: bool,
    /// `P` and `P*` both semi-reflexive.
    pub both_semi_reflexive: bool,
    /// `P = {x : Ax <= 1}` with integral `A`, and integral vertices.
    pub matrix_form: bool,
    pub agree: bool,
    /// Filled when the predicates disagree.
    pub counterexample: Option<String>,
}

/// When the origin is not interior, `P*` is unbounded and not a polytope,
/// so the second predicate is false; all three are then false together.
pub fn check_reflexive_duality(p: &Polytope) -> Result<DualityReport, ClassifyError> {
    if p.is_empty() {
        return Err(PolytopeError::Empty.into());
    }
    let reflexive = is_reflexive(p)?;
    let dual = if p.origin_in_interior() {
        polar_dual_polytope(p)?
    } else {
        None
    };
    let both_semi_reflexive = match &dual {
        Some(dual) => {
            is_semi_reflexive_structural(p)?.semi_reflexive
                && is_semi_reflexive_structural(dual)?.semi_reflexive
        }
        None => false,
    };
    // {Ax <= 1} contains a neighbourhood of 0, so it is full-dimensional
    let matrix_form = p.is_full_dimensional()
        && p.has_integral_vertices()
        && minimal_facets(p)?.halfspaces().iter().all(|h| {
            let b = h.offset();
            b.is_positive() && {
                let row: Vec<Rational> = h.normal().iter().map(|a| a / b).collect();
                is_integral_vector(&row)
            }
        });
    let agree = reflexive == both_semi_reflexive && reflexive == matrix_form;
    let counterexample = (!agree).then(|| {
        let verts: Vec<String> = p
            .vertices()
            .iter()
            .map(|v| {
                let c: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", c.join(","))
            })
            .collect();
        format!(
            "reflexive={reflexive} both_semi_reflexive={both_semi_reflexive} \
             matrix_form={matrix_form} vertices=[{}] dual_bounded={}",
            verts.join(" "),
            dual.is_some()
        )
    });
    Ok(DualityReport {
        reflexive,
        both_semi_reflexive,
        matrix_form,
        agree,
        counterexample,
    })
}
