//! Exact rational scalars.
//!
//! The ground field is fixed to the rationals. Values are always kept in
//! lowest terms with a positive denominator, so the text form `p/q` (or `p`
//! when `q = 1`) is canonical and byte-stable.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p/q`, `p`, `-p/q`. Rejects zero denominators and anything that
/// is not an exact rational literal.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Canonical text form: lowest terms, sign on the numerator, `p` when the
/// denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn pow(s: &Scalar, e: u32) -> Scalar {
    let mut r = one();
    for _ in 0..e {
        r *= s;
    }
    r
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for (txt, canon) in [("3", "3"), ("6/4", "3/2"), ("-2/-4", "1/2"), ("0/5", "0"), (" 7 / 3 ", "7/3")] {
            assert_eq!(format_scalar(&parse_scalar(txt).unwrap()), canon);
        }
    }

    #[test]
    fn rejects_zero_denominator_and_junk() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("a/b").is_err());
    }

    #[test]
    fn denominator_positive() {
        let s = ratio(1, -3);
        assert!(s.denom().is_positive());
        assert_eq!(format_scalar(&s), "-1/3");
    }
}
