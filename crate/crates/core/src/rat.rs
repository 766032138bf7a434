//! Exact rational scalars.
//!
//! Every comparison in the crate is an exact claim about an order relation,
//! so scalars are arbitrary-precision rationals throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The scalar type used for all function values and coefficients.
pub type Rat = BigRational;

/// Shorthand for `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer as an exact rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses a rational from `"p/q"` or plain integer text.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let body = text.trim();
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidFunction(format!("bad rational numerator in {body:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidFunction(format!("bad rational denominator in {body:?}")))?;
    if den.is_zero() {
        return Err(Error::InvalidFunction(format!("zero denominator in {body:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Formats a rational in lowest terms as `"p/q"`, or `"p"` when integral.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Sum of absolute differences used by pseudometrics: `|a - b|`.
pub fn abs_diff(a: &Rat, b: &Rat) -> Rat {
    (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["3/4", "-7/2", "5", "0", "12/8"] {
            let v = parse_rat(text).unwrap();
            let back = parse_rat(&format_rat(&v)).unwrap();
            assert_eq!(v, back);
        }
        assert_eq!(format_rat(&parse_rat("12/8").unwrap()), "3/2");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("").is_err());
    }
}
