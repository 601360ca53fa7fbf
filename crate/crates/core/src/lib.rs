//! Exact real-parameter lattice-point counting for rational polytopes.
//!
//! For a rational polytope `P` and real `s >= 0` the crate computes
//! `L_P(s) = #(sP ∩ Z^d)` exactly as a step function with rational
//! breakpoints, and decides whether `P` only gains lattice points at integer
//! dilations (`L_P(s) = L_P(floor s)`), both from its inequality description
//! and by direct evaluation. It also decides reflexivity through polar
//! duality.

pub mod classify;
pub mod cli;
pub mod ehrhart;
pub mod exact_math;
pub mod families;
pub mod formats;
pub mod polytope;
