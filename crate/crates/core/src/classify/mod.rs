//! Semi-reflexivity and reflexivity classification.
//!
//! The structural test reads the answer off the canonical facet form; the
//! numeric test inspects the exact step function up to a cutoff and is only
//! a semi-decision. Both are exposed so callers can cross-check them.

mod cone;
mod reflexive;
mod structural;
mod witness;

pub use cone::{cone_deep_point, cone_facets, is_deep_point};
pub use reflexive::{check_reflexive_duality, is_reflexive, polar_dual_polytope, DualityReport};
pub use structural::{is_semi_reflexive_structural, StructuralResult};
pub use witness::{only_if_witness, origin_outside_witness, DilationWitness};

use num_traits::Zero;
use thiserror::Error;

use crate::ehrhart::{floor_property, step_function, EhrhartError};
use crate::exact_math::{rat, Rational};
use crate::polytope::{HRep, Polytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("cone generators must span the whole space")]
    ConeNotFullDimensional,
    #[error("cone is not pointed enough: the generator sum lies on a facet")]
    ConeNotPointed,
    #[error("delta must be positive")]
    NonPositiveDelta,
    #[error("s_max must be at least 2 (got {0})")]
    SMaxTooSmall(Rational),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Ehrhart(#[from] EhrhartError),
}

/// Outcome of the floor check on `[0, s_max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericCheck {
    pub holds: bool,
    pub s_max: Rational,
    pub witness: Option<Rational>,
}

pub fn is_semi_reflexive_numeric(
    p: &Polytope,
    s_max: &Rational,
) -> Result<NumericCheck, ClassifyError> {
    if s_max < &rat(2, 1) {
        return Err(ClassifyError::SMaxTooSmall(s_max.clone()));
    }
    let f = step_function(p, s_max, false)?;
    let check = floor_property(&f);
    Ok(NumericCheck {
        holds: check.holds,
        s_max: s_max.clone(),
        witness: check.witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub origin_in_p: bool,
    pub full_dim: bool,
    pub semi_reflexive_structural: bool,
    /// Present iff `semi_reflexive_structural`.
    pub canonical_hrep: Option<HRep>,
    pub semi_reflexive_numeric: Option<NumericCheck>,
    pub reflexive: bool,
    pub notes: Vec<String>,
}

impl Classification {
    /// Structural and numeric answers disagree on the checked window.
    pub fn is_inconsistent(&self) -> bool {
        self.semi_reflexive_numeric
            .as_ref()
            .is_some_and(|n| n.holds != self.semi_reflexive_structural)
    }
}

/// Runs every classifier; the numeric check only when `s_max` is given.
pub fn classify(p: &Polytope, s_max: Option<&Rational>) -> Result<Classification, ClassifyError> {
    let structural = is_semi_reflexive_structural(p)?;
    let mut notes = structural.notes;
    let numeric = s_max.map(|s| is_semi_reflexive_numeric(p, s)).transpose()?;
    if let Some(n) = &numeric {
        if n.holds != structural.semi_reflexive {
            notes.push(format!(
                "defect: structural answer {} but numeric answer {} on [0, {}]",
                structural.semi_reflexive, n.holds, n.s_max
            ));
        }
    }
    let reflexive = is_reflexive(p)?;
    if p.dim() > 0 && !p.is_empty() && p.vertices().iter().all(|v| v.iter().all(Zero::is_zero)) {
        notes.push("single point at the origin: constant lattice count 1".to_string());
    }
    Ok(Classification {
        origin_in_p: p.contains_origin(),
        full_dim: p.is_full_dimensional(),
        semi_reflexive_structural: structural.semi_reflexive,
        canonical_hrep: structural.canonical,
        semi_reflexive_numeric: numeric,
        reflexive,
        notes,
    })
}
