//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator and prints them canonically (`"3/2"`, `"-4"`), which is the
//! string form used throughout the reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn q(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or `"p"`; decimals and exponents are rejected.
pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical string: lowest terms, sign on the numerator, no `/1`.
pub fn render(x: &Scalar) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_are_canonical() {
        assert_eq!(render(&parse("6/4").unwrap()), "3/2");
        assert_eq!(render(&parse("-10/-5").unwrap()), "2");
        assert_eq!(render(&parse("3/-9").unwrap()), "-1/3");
        assert_eq!(render(&parse(" 7 ").unwrap()), "7");
    }

    #[test]
    fn parse_rejects_decimals_and_zero_denominator() {
        assert!(parse("1.5").is_err());
        assert!(parse("1e3").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn addition_is_exact() {
        assert_eq!(frac(1, 3) + frac(1, 6), frac(1, 2));
        assert_eq!(frac(1, 10) + frac(2, 10), frac(3, 10));
    }
}
