//! The real-parameter lattice-point enumerator `L_P(s)` as an exact step
//! function, plus the floor/ceiling properties and drop detection.

mod count;
mod interval;
mod lattice;
mod properties;
mod step;

pub use count::count;
pub use interval::{membership_interval, Endpoint, MembershipInterval};
pub use properties::{ceil_property, drop_points, floor_property, PropertyCheck};
pub use step::{step_function, Piece, StepFunction};

use thiserror::Error;

use crate::polytope::PolytopeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhrhartError {
    #[error("s_max must be positive")]
    NonPositiveSMax,
    #[error("dilation must be nonnegative")]
    NegativeDilation,
    #[error("candidate box exceeds machine integer range")]
    TooLarge,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}
