//! Exact rational scalars.
//!
//! All tower arithmetic is ultimately coefficient arithmetic over `Rational`,
//! an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Serialized form is `"p/q"`, or `"p"` when the denominator
//! is one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::Error;

pub type Rational = num_rational::BigRational;

pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Rejects empty input, malformed integers and a
/// zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let p = BigInt::from_str(num).map_err(|_| bad())?;
    let q = match den {
        Some(q) => BigInt::from_str(q).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical string form `"p/q"` (or `"p"` for integers); inverse of
/// [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// max(|numerator|, denominator); used to bound random test inputs.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Square root of a rational if one exists; the nonnegative root is returned.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let pn = r.numer().sqrt();
    if &(&pn * &pn) != r.numer() {
        return None;
    }
    let qn = r.denom().sqrt();
    if &(&qn * &qn) != r.denom() {
        return None;
    }
    Some(Rational::new(pn, qn))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-7", "1/2", "-3/4", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "/", "1/0", "a", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&rat_frac(9, 4)), Some(rat_frac(3, 2)));
        assert_eq!(rational_sqrt(&rat_i64(0)), Some(rat_i64(0)));
        assert_eq!(rational_sqrt(&rat_i64(2)), None);
        assert_eq!(rational_sqrt(&rat_i64(-4)), None);
    }

    #[test]
    fn height_is_max_of_parts() {
        assert_eq!(height(&rat_frac(-7, 3)), BigInt::from(7));
        assert_eq!(height(&rat_frac(2, 50)), BigInt::from(25));
    }
}
