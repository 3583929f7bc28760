//! Exact rationals and the tangent addition/subtraction algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction of arbitrary-precision integers, denominator > 0.
pub type Rational = BigRational;

/// Builds the reduced, denominator-positive representation of `p/q`.
pub fn make_rational(p: BigInt, q: BigInt) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(p, q))
}

/// Convenience constructor from machine integers.
pub fn ratio(p: i64, q: i64) -> Rational {
    make_rational(BigInt::from(p), BigInt::from(q)).expect("nonzero denominator")
}

/// Which tangent combination to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Add,
    Sub,
}

/// Tangent of the combined angle: `(x+y)/(1-xy)` in add mode,
/// `(x-y)/(1+xy)` in sub mode.
///
/// This is pure tangent algebra; interpreting the output as the arctangent
/// of the combined angle is the caller's business (it needs `xy < 1`
/// resp. `xy > -1`, which this function does not check). The exact angle
/// machinery in [`crate::angle`] never relies on those side conditions.
pub fn arctan_combine(x: &Rational, y: &Rational, mode: CombineMode) -> Result<Rational> {
    let xy = x * y;
    match mode {
        CombineMode::Add => {
            let den = Rational::one() - &xy;
            if den.is_zero() {
                return Err(Error::CombinePole("x*y = 1 in add mode"));
            }
            Ok((x + y) / den)
        }
        CombineMode::Sub => {
            let den = Rational::one() + &xy;
            if den.is_zero() {
                return Err(Error::CombinePole("x*y = -1 in sub mode"));
            }
            Ok((x - y) / den)
        }
    }
}

/// `10^k` as a big integer.
pub fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// `1 / (c * 10^k)` as a rational, handy for digit tolerances.
pub fn pow10_inv(k: u32, c: u32) -> Rational {
    Rational::new(BigInt::one(), pow10(k) * BigInt::from(c))
}

/// Absolute value of a rational.
pub fn rational_abs(x: &Rational) -> Rational {
    if x.is_negative() {
        -x
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign_normalization() {
        let r = make_rational(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!(r, ratio(1, 2));
        let r = make_rational(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(r, ratio(-1, 2));
        assert!(r.denom() > &BigInt::zero());
        let r = make_rational(BigInt::from(0), BigInt::from(7)).unwrap();
        assert_eq!(r.numer(), &BigInt::zero());
        assert_eq!(r.denom(), &BigInt::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            make_rational(BigInt::from(1), BigInt::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn combine_examples() {
        // atan 1 + atan 1/3 = atan 2
        let out = arctan_combine(&ratio(1, 1), &ratio(1, 3), CombineMode::Add).unwrap();
        assert_eq!(out, ratio(2, 1));
        // identity element
        let x = ratio(7, 13);
        let out = arctan_combine(&x, &ratio(0, 1), CombineMode::Add).unwrap();
        assert_eq!(out, x);
        // atan 3/4 - atan 3/29 = atan 3/5  (Gaussian check: (4+3i)(29-3i) = 125+75i)
        let out = arctan_combine(&ratio(3, 4), &ratio(3, 29), CombineMode::Sub).unwrap();
        assert_eq!(out, ratio(3, 5));
    }

    #[test]
    fn combine_pole_detected() {
        let err = arctan_combine(&ratio(2, 1), &ratio(1, 2), CombineMode::Add).unwrap_err();
        assert!(matches!(err, Error::CombinePole(_)));
        let err = arctan_combine(&ratio(-2, 1), &ratio(1, 2), CombineMode::Sub).unwrap_err();
        assert!(matches!(err, Error::CombinePole(_)));
    }
}
