use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::exact_math::{format_rational, parse_rational, RatVector, Rational};
use crate::polytope::{HRep, HalfSpace, Polytope};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InequalityDoc {
    a: Vec<String>,
    b: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeDoc {
    dim: usize,
    inequalities: Vec<InequalityDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Vec<String>>>,
}

pub(crate) fn rat_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_field(text: &str, field: &str) -> Result<Rational, FormatError> {
    parse_rational(text).map_err(|source| FormatError::Rational {
        field: field.to_string(),
        source,
    })
}

pub(crate) fn inequality_docs(rep: &HRep) -> Vec<serde_json::Value> {
    rep.halfspaces()
        .iter()
        .map(|h| {
            serde_json::to_value(InequalityDoc {
                a: rat_strings(h.normal()),
                b: format_rational(h.offset()),
            })
            .expect("plain strings serialize")
        })
        .collect()
}

/// Pretty-printed polytope JSON; vertices are included when requested.
pub fn polytope_json(p: &Polytope, with_vertices: bool) -> String {
    let doc = PolytopeDoc {
        dim: p.dim(),
        inequalities: p
            .halfspaces()
            .iter()
            .map(|h| InequalityDoc {
                a: rat_strings(h.normal()),
                b: format_rational(h.offset()),
            })
            .collect(),
        vertices: with_vertices.then(|| p.vertices().iter().map(|v| rat_strings(v)).collect()),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain strings serialize");
    out.push('\n');
    out
}

/// Parses the inequality list and any listed vertices, without validating
/// boundedness.
pub fn parse_polytope_json(text: &str) -> Result<(HRep, Option<Vec<RatVector>>), FormatError> {
    let doc: PolytopeDoc =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let mut halfspaces = Vec::with_capacity(doc.inequalities.len());
    for (i, ineq) in doc.inequalities.iter().enumerate() {
        let a = ineq
            .a
            .iter()
            .enumerate()
            .map(|(j, x)| parse_field(x, &format!("inequalities[{i}].a[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let b = parse_field(&ineq.b, &format!("inequalities[{i}].b"))?;
        if a.len() != doc.dim {
            return Err(FormatError::Polytope(
                crate::polytope::PolytopeError::DimensionMismatch {
                    expected: doc.dim,
                    actual: a.len(),
                },
            ));
        }
        halfspaces.push(HalfSpace::new(a, b)?);
    }
    let vertices = doc
        .vertices
        .map(|vs| {
            vs.iter()
                .enumerate()
                .map(|(i, v)| {
                    v.iter()
                        .enumerate()
                        .map(|(j, x)| parse_field(x, &format!("vertices[{i}][{j}]")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok((HRep::new(doc.dim, halfspaces)?, vertices))
}

/// Parses and validates a polytope; listed vertices must equal the
/// computed vertex set.
pub fn read_polytope(text: &str) -> Result<Polytope, FormatError> {
    let (rep, listed) = parse_polytope_json(text)?;
    let p = Polytope::new(rep)?;
    if let Some(mut listed) = listed {
        listed.sort();
        listed.dedup();
        if listed.as_slice() != p.vertices() {
            return Err(FormatError::VertexMismatch);
        }
    }
    Ok(p)
}
