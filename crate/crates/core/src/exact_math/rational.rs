use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MathError;

/// Exact, always-reduced fraction with a positive denominator.
pub type Rational = BigRational;
pub type Integer = BigInt;
pub type RatVector = Vec<Rational>;
pub type IntVector = Vec<Integer>;

/// Shorthand constructor, mostly for tests and tables.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
/// Unreduced input is accepted and normalized.
pub fn parse_rational(text: &str) -> Result<Rational, MathError> {
    let err = || MathError::Parse(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` with `q > 0` reduced, or `"p"` when `q = 1`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

pub fn is_integral_vector(v: &[Rational]) -> bool {
    v.iter().all(is_integral)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn int_vector_to_rat(v: &[Integer]) -> RatVector {
    v.iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect()
}

/// The smallest positive multiple of `a` with integer entries. The result
/// has gcd 1 and points in the same direction as `a`.
pub fn primitive_integer_vector(a: &[Rational]) -> Result<IntVector, MathError> {
    if a.iter().all(Zero::is_zero) {
        return Err(MathError::ZeroVector);
    }
    let scale = lcm_of_denominators(a);
    let scaled: IntVector = a.iter().map(|x| x.numer() * (&scale / x.denom())).collect();
    let g = scaled
        .iter()
        .fold(Integer::zero(), |acc, x| acc.gcd(&x.abs()));
    Ok(scaled.into_iter().map(|x| x / &g).collect())
}
