use num_traits::{One, Signed, Zero};

use super::ClassifyError;
use crate::exact_math::{is_integral_vector, Rational};
use crate::polytope::{lattice_project, minimal_facets, HRep, HalfSpace, Polytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralResult {
    pub semi_reflexive: bool,
    /// Facet form with every offset in `{0, 1}` and integral normals where
    /// the offset is 1; present iff `semi_reflexive`.
    pub canonical: Option<HRep>,
    pub notes: Vec<String>,
}

impl StructuralResult {
    fn rejected(note: String) -> Self {
        Self {
            semi_reflexive: false,
            canonical: None,
            notes: vec![note],
        }
    }
}

/// Decides semi-reflexivity from the minimal facet description.
///
/// Facet inequalities of a full-dimensional polytope are unique up to
/// positive scaling, and dividing by a positive offset is scale-canonical,
/// so it suffices to test the one normalized form. Lower-dimensional
/// polytopes are first moved to a full-dimensional lattice image.
pub fn is_semi_reflexive_structural(p: &Polytope) -> Result<StructuralResult, ClassifyError> {
    if p.is_empty() {
        return Ok(StructuralResult::rejected("empty polytope".to_string()));
    }
    if !p.contains_origin() {
        let note = if p.is_full_dimensional() {
            "origin outside P: some facet has a negative offset"
        } else {
            "origin outside P (lower-dimensional): the count drops, so not semi-reflexive"
        };
        return Ok(StructuralResult::rejected(note.to_string()));
    }
    if p.is_full_dimensional() {
        return Ok(match normalize_facets(p)? {
            Ok(rep) => StructuralResult {
                semi_reflexive: true,
                canonical: Some(rep),
                notes: Vec::new(),
            },
            Err(note) => StructuralResult::rejected(note),
        });
    }
    let projection = lattice_project(p)?;
    let note = format!(
        "lower-dimensional: decided on a unimodular image of dimension {}",
        projection.rank()
    );
    let image_rep = match projection.image() {
        None => None,
        Some(q) => match normalize_facets(q)? {
            Ok(rep) => Some(rep),
            Err(reason) => {
                let mut out = StructuralResult::rejected(note);
                out.notes.push(reason);
                return Ok(out);
            }
        },
    };
    Ok(StructuralResult {
        semi_reflexive: true,
        canonical: Some(projection.lift_hrep(image_rep.as_ref())),
        notes: vec![note],
    })
}

/// The normalized facet list of a full-dimensional `q`, or the reason the
/// first offending facet cannot be normalized.
fn normalize_facets(q: &Polytope) -> Result<Result<HRep, String>, ClassifyError> {
    let facets = minimal_facets(q)?;
    let mut out = Vec::with_capacity(facets.len());
    for h in facets.halfspaces() {
        let b = h.offset();
        if b.is_negative() {
            return Ok(Err(format!("facet {} has a negative offset", describe(h))));
        }
        if b.is_zero() {
            out.push(h.canonical());
            continue;
        }
        let normal: Vec<Rational> = h.normal().iter().map(|a| a / b).collect();
        if !is_integral_vector(&normal) {
            return Ok(Err(format!(
                "facet {} normalizes to a non-integral normal with offset 1",
                describe(h)
            )));
        }
        out.push(HalfSpace::new(normal, Rational::one())?);
    }
    Ok(Ok(HRep::new(q.dim(), out)?))
}

fn describe(h: &HalfSpace) -> String {
    let normal: Vec<String> = h.normal().iter().map(ToString::to_string).collect();
    format!("<({}), x> <= {}", normal.join(", "), h.offset())
}
