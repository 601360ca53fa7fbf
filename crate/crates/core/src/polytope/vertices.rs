use std::collections::BTreeSet;

use super::{is_bounded, is_feasible, HRep, PolytopeError, VRep};
use crate::exact_math::{solve_linear_system, RatMatrix, RatVector, Rational};

/// Lexicographically ordered `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().and_then(|c| {
            let pos = (0..k).rev().find(|&i| c[i] < n - k + i)?;
            c[pos] += 1;
            for i in pos + 1..k {
                c[i] = c[i - 1] + 1;
            }
            Some(())
        });
        if next.is_none() {
            current = None;
        }
        Some(out)
    })
}

/// Solves every `dim`-subset of constraints at equality and keeps the
/// feasible unique solutions.
pub(crate) fn vertices_of_bounded(hrep: &HRep) -> Result<VRep, PolytopeError> {
    let d = hrep.dim();
    let hs = hrep.halfspaces();
    let mut found = BTreeSet::new();
    for subset in combinations(hs.len(), d) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| hs[i].normal().to_vec()).collect();
        let rhs: RatVector = subset.iter().map(|&i| hs[i].offset().clone()).collect();
        let a = RatMatrix::from_rows(d, rows)?;
        let Some(x) = solve_linear_system(&a, &rhs)? else {
            continue;
        };
        if hs.iter().all(|h| h.is_satisfied(&x, false)) {
            found.insert(x);
        }
    }
    VRep::new(d, found.into_iter().collect())
}

/// Exact vertex set of a bounded H-representation, sorted
/// lexicographically. An empty set yields no vertices.
pub fn enumerate_vertices(hrep: &HRep) -> Result<VRep, PolytopeError> {
    if !is_feasible(hrep) {
        return VRep::new(hrep.dim(), Vec::new());
    }
    if !is_bounded(hrep) {
        return Err(PolytopeError::Unbounded);
    }
    vertices_of_bounded(hrep)
}
