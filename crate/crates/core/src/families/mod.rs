//! Standard families of semi-reflexive polytopes: cubes, simplices,
//! cross-polytopes, order and chain polytopes of finite posets, and
//! quasi-metric polytopes of graphs with vertex degrees 1 and 3.

mod graph;
mod poset;

pub use graph::CubicGraph;
pub use poset::Poset;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_math::Rational;
use crate::polytope::{HRep, HalfSpace, Polytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cube(usize),
    Simplex(usize),
    Cross(usize),
    Order(Poset),
    Chain(Poset),
    Quasimetric(CubicGraph),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Cube(_) => "cube",
            Self::Simplex(_) => "simplex",
            Self::Cross(_) => "cross",
            Self::Order(_) => "order",
            Self::Chain(_) => "chain",
            Self::Quasimetric(_) => "quasimetric",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Cube(d) | Self::Simplex(d) | Self::Cross(d) => *d,
            Self::Order(p) | Self::Chain(p) => p.len(),
            Self::Quasimetric(g) => g.edges().len(),
        }
    }
}

/// Non-empty, comment-stripped, trimmed lines with 1-based line numbers.
pub(crate) fn parse_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn row(d: usize, entries: &[(usize, i64)], offset: i64) -> HalfSpace {
    let mut normal = vec![Rational::zero(); d];
    for &(i, c) in entries {
        normal[i] += Rational::from_integer(c.into());
    }
    HalfSpace::new(normal, Rational::from_integer(offset.into())).expect("nonzero row")
}

fn nonnegativity(d: usize) -> impl Iterator<Item = HalfSpace> {
    (0..d).map(move |i| row(d, &[(i, -1)], 0))
}

/// The inequality description of a family member.
pub fn generate(spec: &FamilySpec) -> Result<HRep, FamilyError> {
    let d = spec.dim();
    if d == 0 {
        return Err(FamilyError::Invalid("dimension must be positive".into()));
    }
    let rows: Vec<HalfSpace> = match spec {
        FamilySpec::Cube(_) => nonnegativity(d)
            .chain((0..d).map(|i| row(d, &[(i, 1)], 1)))
            .collect(),
        FamilySpec::Simplex(_) => {
            let all: Vec<(usize, i64)> = (0..d).map(|i| (i, 1)).collect();
            nonnegativity(d).chain([row(d, &all, 1)]).collect()
        }
        FamilySpec::Cross(_) => {
            if d > 20 {
                return Err(FamilyError::Invalid(
                    "cross-polytope dimension too large".into(),
                ));
            }
            (0..1u32 << d)
                .map(|mask| {
                    let signs: Vec<(usize, i64)> = (0..d)
                        .map(|i| (i, if mask >> (d - 1 - i) & 1 == 1 { 1 } else { -1 }))
                        .collect();
                    row(d, &signs, 1)
                })
                .collect()
        }
        FamilySpec::Order(p) => nonnegativity(d)
            .chain((0..d).map(|i| row(d, &[(i, 1)], 1)))
            .chain(
                p.covers()
                    .into_iter()
                    .map(|(i, j)| row(d, &[(i - 1, 1), (j - 1, -1)], 0)),
            )
            .collect(),
        FamilySpec::Chain(p) => nonnegativity(d)
            .chain(p.maximal_chains().into_iter().map(|chain| {
                let entries: Vec<(usize, i64)> = chain.iter().map(|&i| (i - 1, 1)).collect();
                row(d, &entries, 1)
            }))
            .collect(),
        FamilySpec::Quasimetric(g) => g
            .cubic_stars()
            .into_iter()
            .flat_map(|[i, j, k]| {
                [
                    row(d, &[(i, 1), (j, -1), (k, -1)], 0),
                    row(d, &[(j, 1), (k, -1), (i, -1)], 0),
                    row(d, &[(k, 1), (i, -1), (j, -1)], 0),
                    row(d, &[(i, 1), (j, 1), (k, 1)], 1),
                ]
            })
            .collect(),
    };
    Ok(HRep::new(d, rows)?)
}

/// [`generate`] followed by validation; fails for graphs with an edge not
/// incident to a degree-3 vertex, whose coordinate is unconstrained.
pub fn generate_polytope(spec: &FamilySpec) -> Result<Polytope, FamilyError> {
    let p = Polytope::new(generate(spec)?)?;
    debug_assert!(p
        .halfspaces()
        .iter()
        .all(|h| h.offset().is_zero() || h.offset().is_one()));
    Ok(p)
}

/// Every family member used by the theorem checks: cubes, simplices and
/// cross-polytopes up to dimension 4, order and chain polytopes of all
/// labeled posets on at most 4 elements, and the quasi-metric polytope of
/// `K4`.
pub fn standard_members() -> Vec<(String, FamilySpec)> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push((format!("cube-{d}"), FamilySpec::Cube(d)));
        out.push((format!("simplex-{d}"), FamilySpec::Simplex(d)));
        out.push((format!("cross-{d}"), FamilySpec::Cross(d)));
    }
    for n in 1..=4 {
        for (k, p) in Poset::enumerate(n).into_iter().enumerate() {
            out.push((format!("order-{n}-{k}"), FamilySpec::Order(p.clone())));
            out.push((format!("chain-{n}-{k}"), FamilySpec::Chain(p)));
        }
    }
    out.push((
        "quasimetric-k4".to_string(),
        FamilySpec::Quasimetric(CubicGraph::k4()),
    ));
    out
}
