//! `p/q` literals for exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Parses `p/q` or a bare integer `p`.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Always renders `p/q` in lowest terms, including `0/1` and `1/1`.
pub fn format(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn from_ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse("2/4").unwrap(), from_ratio(1, 2));
        assert_eq!(parse("3").unwrap(), from_ratio(3, 1));
        assert_eq!(parse(" -1/8 ").unwrap(), from_ratio(-1, 8));
        assert!(parse("1/0").is_err());
        assert!(parse("1/-2").is_err());
        assert!(parse("x/2").is_err());
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format(&zero()), "0/1");
        assert_eq!(format(&from_ratio(6, 8)), "3/4");
    }
}
