use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::HRep;
use crate::exact_math::{IntVector, Integer, Rational};

/// `<coeffs, x> <= rhs` with `coeffs` primitive (or all zero).
#[derive(Clone)]
struct Row {
    coeffs: IntVector,
    rhs: Rational,
}

impl Row {
    fn from_rational(normal: &[Rational], rhs: &Rational) -> Self {
        let scale = normal
            .iter()
            .fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
        let coeffs = normal
            .iter()
            .map(|x| x.numer() * (&scale / x.denom()))
            .collect();
        Self::normalized(coeffs, rhs * Rational::from_integer(scale))
    }

    fn normalized(coeffs: IntVector, rhs: Rational) -> Self {
        let g = coeffs
            .iter()
            .fold(Integer::zero(), |acc, c| acc.gcd(&c.abs()));
        if g.is_zero() || g.is_one() {
            return Self { coeffs, rhs };
        }
        let coeffs = coeffs.into_iter().map(|c| c / &g).collect();
        Self {
            coeffs,
            rhs: rhs / Rational::from_integer(g),
        }
    }
}

/// Eliminates every variable in turn. Returns `false` as soon as a
/// constant row `0 <= rhs` with `rhs < 0` appears.
fn eliminate_all(rows: Vec<Row>, nvars: usize) -> bool {
    let mut current = dedup(rows);
    for var in 0..nvars {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for row in current {
            if row.coeffs[var].is_positive() {
                pos.push(row);
            } else if row.coeffs[var].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for p in &pos {
            let cp = &p.coeffs[var];
            for n in &neg {
                let cn = -&n.coeffs[var];
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(a, b)| &cn * a + cp * b)
                    .collect();
                let rhs = Rational::from_integer(cn.clone()) * &p.rhs
                    + Rational::from_integer(cp.clone()) * &n.rhs;
                next.push(Row::normalized(coeffs, rhs));
            }
        }
        current = dedup(next);
        if current.is_empty() {
            return true;
        }
        if current
            .iter()
            .any(|r| r.coeffs.iter().all(Zero::is_zero) && r.rhs.is_negative())
        {
            return false;
        }
    }
    true
}

/// Keeps the tightest row per coefficient vector and drops satisfied
/// constant rows.
fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut tightest: BTreeMap<IntVector, Rational> = BTreeMap::new();
    for row in rows {
        if row.coeffs.iter().all(Zero::is_zero) && !row.rhs.is_negative() {
            continue;
        }
        tightest
            .entry(row.coeffs)
            .and_modify(|r| {
                if row.rhs < *r {
                    *r = row.rhs.clone();
                }
            })
            .or_insert(row.rhs);
    }
    tightest
        .into_iter()
        .map(|(coeffs, rhs)| Row { coeffs, rhs })
        .collect()
}

/// Whether `{x : <a_i, x> <= b_i}` is nonempty.
pub fn is_feasible(hrep: &HRep) -> bool {
    let rows = hrep
        .halfspaces()
        .iter()
        .map(|h| Row::from_rational(h.normal(), h.offset()))
        .collect();
    eliminate_all(rows, hrep.dim())
}

/// True iff the recession cone `{x : <a_i, x> <= 0}` is `{0}`.
///
/// The cone is nontrivial iff for some coordinate `j` and sign `±` the
/// system `A x <= 0, ±x_j >= 1` is feasible.
pub fn is_bounded(hrep: &HRep) -> bool {
    let d = hrep.dim();
    let cone: Vec<Row> = hrep
        .halfspaces()
        .iter()
        .map(|h| Row::from_rational(h.normal(), &Rational::zero()))
        .collect();
    for j in 0..d {
        for sign in [1i64, -1] {
            let mut coeffs = vec![Integer::zero(); d];
            coeffs[j] = Integer::from(-sign);
            let mut rows = cone.clone();
            rows.push(Row {
                coeffs,
                rhs: -Rational::one(),
            });
            if eliminate_all(rows, d) {
                return false;
            }
        }
    }
    true
}
