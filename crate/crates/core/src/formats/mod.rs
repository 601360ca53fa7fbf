//! File formats: polytope JSON, step-function CSV/JSON/SVG, and
//! classification JSON. Every writer is deterministic: fixed key order,
//! fixed number formatting, no timestamps.

mod classification;
mod polytope_json;
mod step;

pub use classification::classification_json;
pub use polytope_json::{parse_polytope_json, polytope_json, read_polytope};
pub use step::{step_function_csv, step_function_json, step_function_svg};

use thiserror::Error;

use crate::exact_math::MathError;
use crate::polytope::PolytopeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad rational in {field}: {source}")]
    Rational { field: String, source: MathError },
    #[error("listed vertices do not match the inequalities")]
    VertexMismatch,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}
