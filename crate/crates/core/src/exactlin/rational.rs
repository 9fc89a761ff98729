use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always normalized (lowest terms, positive denominator).
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d`, normalized. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Size measure used for pivot selection: bits of numerator plus bits of denominator.
pub fn bit_size(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    pub input: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses `"p"` or `"p/q"` with `q > 0` and `gcd(p, q) = 1`.
///
/// Non-reduced fractions are rejected so that the textual form of a value is unique.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: s.to_string(),
        reason,
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let Some(den) = den else {
        return Ok(Rat::from_integer(num));
    };
    let den: BigInt = den
        .parse()
        .map_err(|_| err("denominator is not an integer"))?;
    if !den.is_positive() {
        return Err(err("denominator must be positive"));
    }
    if !num.gcd(&den).is_one() {
        return Err(err("fraction is not in lowest terms"));
    }
    if den.is_one() {
        return Err(err("integer written with denominator 1"));
    }
    Ok(Rat::new_raw(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert_eq!(parse_rat("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(format_rat(&rat(6, -8)), "-3/4");
        assert_eq!(format_rat(&int(-5)), "-5");
        assert!(parse_rat("2/4").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-2").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("3/1").is_err());
        for s in ["0", "7", "-1/2", "123456789012345678901234567891/2"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }

    #[test]
    fn bit_size_orders_simple_first() {
        assert!(bit_size(&int(1)) < bit_size(&rat(1, 1000)));
        assert!(bit_size(&int(2)) < bit_size(&int(-300)));
    }
}
