//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision rational. `Scalar`
//! is kept in canonical form by `num`: positive denominator, fully reduced.
//! The wire format is `"p/q"`, or just `"p"` when the denominator is 1,
//! with the sign carried by the numerator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

/// Integer scalar `n/1`.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar `p/q`. Panics on `q = 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(x: &Scalar) -> bool {
    x.is_zero()
}

/// Parse the canonical string form: `"p"` or `"p/q"`, optionally signed.
pub fn parse(s: &str) -> Result<Scalar, Error> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::BadParameter(format!("invalid rational {s:?}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::BadParameter(format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::BadParameter(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical string form, `"p/q"` or `"p"` when q = 1.
pub fn format(x: &Scalar) -> String {
    x.to_string()
}

/// `x!` as a scalar.
pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// `base^exp` for a nonnegative integer exponent.
pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Absolute value, used when ranking pivot candidates for readable output.
pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_canonical_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-3").unwrap(), int(-3));
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse("4/-6").unwrap(), frac(-2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn format_drops_unit_denominator() {
        assert_eq!(format(&int(-7)), "-7");
        assert_eq!(format(&frac(9, 2)), "9/2");
        assert_eq!(format(&frac(-9, 2)), "-9/2");
    }

    proptest! {
        #[test]
        fn round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let x = frac(p, q);
            prop_assert_eq!(parse(&format(&x)).unwrap(), x);
        }
    }
}
