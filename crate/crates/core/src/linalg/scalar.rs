use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

/// `numer / denom`; panics on a zero denominator.
pub fn frac(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^exponent`.
pub fn sign(odd: bool) -> Scalar {
    if odd {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Parses `p` or `p/q` (optional sign, surrounding whitespace allowed).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// Renders as `p/q`, or `p` for integers.
pub fn scalar_string(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn abs_numer_key(value: &Scalar) -> BigInt {
    value.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar(" -4/6 ").unwrap(), frac(-2, 3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(scalar_string(&frac(6, -4)), "-3/2");
        assert_eq!(scalar_string(&int(-7)), "-7");
    }
}
