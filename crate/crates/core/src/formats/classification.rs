use serde::Serialize;

use super::polytope_json::{inequality_docs, rat_strings};
use crate::classify::Classification;
use crate::exact_math::{format_rational, Rational};

#[derive(Serialize)]
struct NumericDoc {
    holds: bool,
    s_max: String,
    witness: Option<String>,
}

#[derive(Serialize)]
struct CanonicalDoc {
    dim: usize,
    inequalities: Vec<serde_json::Value>,
}

#[derive(Serialize)]
struct ClassificationDoc {
    #[serde(rename = "origin_in_P")]
    origin_in_p: bool,
    full_dim: bool,
    semi_reflexive_structural: bool,
    canonical_hrep: Option<CanonicalDoc>,
    semi_reflexive_numeric: Option<NumericDoc>,
    reflexive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    drop_points: Option<Vec<String>>,
    notes: Vec<String>,
}

/// Classification fields in declaration order; `drop_points` is emitted
/// only when supplied.
pub fn classification_json(c: &Classification, drop_points: Option<&[Rational]>) -> String {
    let doc = ClassificationDoc {
        origin_in_p: c.origin_in_p,
        full_dim: c.full_dim,
        semi_reflexive_structural: c.semi_reflexive_structural,
        canonical_hrep: c.canonical_hrep.as_ref().map(|h| CanonicalDoc {
            dim: h.dim(),
            inequalities: inequality_docs(h),
        }),
        semi_reflexive_numeric: c.semi_reflexive_numeric.as_ref().map(|n| NumericDoc {
            holds: n.holds,
            s_max: format_rational(&n.s_max),
            witness: n.witness.as_ref().map(format_rational),
        }),
        reflexive: c.reflexive,
        drop_points: drop_points.map(rat_strings),
        notes: c.notes.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}
