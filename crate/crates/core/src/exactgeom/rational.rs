//! Exact rational helpers and the `p/q` literal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("empty literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("projective point `{0}` must be written `p:q` with (p,q) != (0,0)")]
    BadProjective(String),
}

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

pub(crate) fn parse_integer(text: &str) -> Result<BigInt, LiteralError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(LiteralError::Empty);
    }
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LiteralError::BadInteger(t.to_string()));
    }
    t.parse::<BigInt>()
        .map_err(|_| LiteralError::BadInteger(t.to_string()))
}

/// Parses `p/q` or `p`. The result is always in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, LiteralError> {
    let t = text.trim();
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(t)?)),
        Some((n, d)) => {
            let num = parse_integer(n)?;
            let den = parse_integer(d)?;
            if den.is_zero() {
                return Err(LiteralError::ZeroDenominator(t.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Smallest positive integer `m` with `m * q` integral.
pub(crate) fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
