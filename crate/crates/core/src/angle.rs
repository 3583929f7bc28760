//! Exact representation and decision procedure for formal integer
//! combinations of arctangents of non-negative rationals.
//!
//! A sum `Σ c_i · arctan(p_i/q_i)` maps to the Gaussian-integer product
//! `Π (q_i + p_i·i)^{c_i}` (conjugates for negative coefficients), whose
//! argument equals the sum modulo π-multiples. The product is exact; the
//! missing π-multiple is pinned down by certified interval evaluation at
//! escalating precision. The angle is exactly zero iff the primitive
//! product is `1 + 0i` and the π-multiple is zero, so "verified" claims
//! never rest on numerics alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ball::{atan_ratio, half_pi_ball, pi_ball, CertifiedReal};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::rational::Rational;

/// One summand `coeff · arctan(arg)` with `arg >= 0` and `coeff != 0`
/// (signs live in the coefficient; zero arguments are allowed and
/// contribute a zero angle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArctanTerm {
    coeff: i64,
    arg: Rational,
}

impl ArctanTerm {
    /// Panics on a zero coefficient or negative argument; both indicate
    /// a builder bug, not bad user input.
    pub fn new(coeff: i64, arg: Rational) -> Self {
        assert!(coeff != 0, "ArctanTerm coefficient must be nonzero");
        assert!(!arg.is_negative(), "ArctanTerm argument must be >= 0");
        ArctanTerm { coeff, arg }
    }

    pub fn coeff(&self) -> i64 {
        self.coeff
    }

    pub fn arg(&self) -> &Rational {
        &self.arg
    }

    pub fn negated(&self) -> ArctanTerm {
        ArctanTerm {
            coeff: -self.coeff,
            arg: self.arg.clone(),
        }
    }
}

/// Formal integer-weighted sum of arctangents; the empty sum is the zero
/// angle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AngleSum {
    terms: Vec<ArctanTerm>,
}

impl AngleSum {
    pub fn empty() -> Self {
        AngleSum { terms: Vec::new() }
    }

    pub fn new(terms: Vec<ArctanTerm>) -> Self {
        AngleSum { terms }
    }

    pub fn push(&mut self, term: ArctanTerm) {
        self.terms.push(term);
    }

    pub fn terms(&self) -> &[ArctanTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Flips every coefficient.
    pub fn negated(&self) -> AngleSum {
        AngleSum {
            terms: self.terms.iter().map(ArctanTerm::negated).collect(),
        }
    }

    /// Concatenation (no merging of like terms).
    pub fn concat(&self, other: &AngleSum) -> AngleSum {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        AngleSum { terms }
    }

    /// Multiplies every coefficient by `k != 0`.
    pub fn scaled(&self, k: i64) -> AngleSum {
        assert!(k != 0, "scaling an AngleSum by zero is not meaningful");
        AngleSum {
            terms: self
                .terms
                .iter()
                .map(|t| ArctanTerm::new(t.coeff * k, t.arg.clone()))
                .collect(),
        }
    }
}

/// Canonical exact form of an [`AngleSum`]: the angle equals
/// `arg(z) + pi_multiple · π` with `arg(z) ∈ (-π, π]` and `z` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedAngle {
    pub z: GaussianInt,
    pub pi_multiple: i64,
}

/// The primitive Gaussian integer whose argument is the angle sum modulo
/// π-multiples. Each term `c · arctan(p/q)` contributes `(q + p·i)^c`,
/// negative `c` via the conjugate `(q - p·i)^|c|`; the accumulator is
/// reduced to primitive form after every multiplication.
pub fn gaussian_product(a: &AngleSum) -> GaussianInt {
    let mut acc = GaussianInt::one();
    for term in a.terms() {
        let p = term.arg().numer();
        let q = term.arg().denom();
        let base = if term.coeff() >= 0 {
            GaussianInt::new(q.clone(), p.clone())
        } else {
            GaussianInt::new(q.clone(), -p)
        };
        let factor = base.pow_primitive(term.coeff().unsigned_abs());
        acc = acc.mul(&factor).primitive();
    }
    acc
}

/// Ball containing the exact angle, radius at most
/// `2^(1-precision_bits) · (1 + number of terms)`.
pub fn certified_value(a: &AngleSum, precision_bits: u32) -> CertifiedReal {
    if a.is_empty() {
        return CertifiedReal::exact_zero();
    }
    let coeff_sum: u64 = a.terms().iter().map(|t| t.coeff().unsigned_abs()).sum();
    let mut extra = 64 + 64 - coeff_sum.max(1).leading_zeros();
    loop {
        let w = precision_bits + extra;
        let mut acc = CertifiedReal::exact_zero();
        for term in a.terms() {
            let ball = atan_ratio(term.arg().numer(), term.arg().denom(), w);
            acc = acc.add(&ball.mul_i64(term.coeff()));
        }
        if acc.radius_leq_pow2(1 + a.len() as u64, 1 - precision_bits as i64) {
            return acc;
        }
        // Unreachable with the guard bits above; kept as a hard backstop.
        extra *= 2;
    }
}

/// Certified enclosure of the principal argument of `z != 0`,
/// `arg ∈ (-π, π]`, radius at most `2^-bits`.
pub fn arg_ball(z: &GaussianInt, bits: u32) -> CertifiedReal {
    let re = z.re();
    let im = z.im();
    assert!(
        !(re.is_zero() && im.is_zero()),
        "argument of zero is undefined"
    );
    if re.is_positive() {
        if im.is_zero() {
            CertifiedReal::exact_zero()
        } else {
            atan_ratio(im, re, bits)
        }
    } else if re.is_zero() {
        if im.is_positive() {
            half_pi_ball(bits)
        } else {
            half_pi_ball(bits).neg()
        }
    } else if im.is_zero() {
        pi_ball(bits)
    } else {
        // atan(im/re) with re < 0, rewritten over a positive denominator
        let atan = atan_ratio(&-im, &-re, bits + 1);
        if im.is_positive() {
            pi_ball(bits + 1).add(&atan)
        } else {
            atan.sub(&pi_ball(bits + 1))
        }
    }
}

const ISOLATION_START_BITS: u32 = 64;
const ISOLATION_CAP_BITS: u32 = 1 << 20;

fn try_isolate(a: &AngleSum, z: &GaussianInt, bits: u32) -> Option<i64> {
    let angle = certified_value(a, bits);
    let argz = arg_ball(z, bits);
    let diff = angle.sub(&argz);
    let pi = pi_ball(bits);
    // Candidate multiple from the midpoints; rigor comes from the check.
    let num = diff.midpoint();
    let den = pi.midpoint();
    // round(num/den) with den > 0: floor((2ab' + a'b) / (2a'b))
    let two = BigInt::from(2);
    let quotient = (num.numer() * den.denom() * &two + den.numer() * num.denom())
        .div_floor(&(den.numer() * num.denom() * &two));
    let k: i64 = i64::try_from(&quotient).ok()?;
    let residual = diff.sub(&pi.mul_i64(k));
    // Isolated iff |residual| is provably below π/4.
    let quarter_pi_low = pi.lower_bound() / Rational::from_integer(BigInt::from(4));
    if residual.abs_upper_bound() < quarter_pi_low {
        Some(k)
    } else {
        None
    }
}

/// Reduces an angle sum to its canonical `(z, k)` form. The π-multiple is
/// isolated by certified evaluation starting at 64 bits and doubling up
/// to a hard cap; exceeding the cap signals an internal bug because exact
/// inputs guarantee termination.
pub fn reduce(a: &AngleSum) -> Result<ReducedAngle> {
    let z = gaussian_product(a);
    let mut bits = ISOLATION_START_BITS;
    loop {
        if let Some(k) = try_isolate(a, &z, bits) {
            return Ok(ReducedAngle { z, pi_multiple: k });
        }
        if bits >= ISOLATION_CAP_BITS {
            return Err(Error::PrecisionCapExceeded {
                cap_bits: ISOLATION_CAP_BITS,
            });
        }
        bits = (bits * 2).min(ISOLATION_CAP_BITS);
    }
}

/// True iff the angle sum is exactly zero.
pub fn is_zero(a: &AngleSum) -> Result<bool> {
    let reduced = reduce(a)?;
    Ok(reduced.z.is_one() && reduced.pi_multiple == 0)
}

/// True iff both sums denote exactly the same angle.
pub fn equals(lhs: &AngleSum, rhs: &AngleSum) -> Result<bool> {
    is_zero(&lhs.concat(&rhs.negated()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn term(c: i64, p: i64, q: i64) -> ArctanTerm {
        ArctanTerm::new(c, ratio(p, q))
    }

    fn sum(ts: Vec<ArctanTerm>) -> AngleSum {
        AngleSum::new(ts)
    }

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(BigInt::from(re), BigInt::from(im))
    }

    #[test]
    fn gaussian_product_examples() {
        // atan 1 + atan 1/3: (1+i)(3+i) = 2+4i, primitive (1, 2)
        let a = sum(vec![term(1, 1, 1), term(1, 1, 3)]);
        assert_eq!(gaussian_product(&a), gi(1, 2));
        // empty product
        assert_eq!(gaussian_product(&AngleSum::empty()), gi(1, 0));
        // atan 1/2 + atan 1/3 - atan 1: (2+i)(3+i)(1-i) = 10
        let a = sum(vec![term(1, 1, 2), term(1, 1, 3), term(-1, 1, 1)]);
        assert_eq!(gaussian_product(&a), gi(1, 0));
    }

    #[test]
    fn reduce_examples() {
        // 4 atan 1 = π: (1+i)^4 = -4 → ((-1,0), 0)
        let r = reduce(&sum(vec![term(4, 1, 1)])).unwrap();
        assert_eq!(r.z, gi(-1, 0));
        assert_eq!(r.pi_multiple, 0);

        let r = reduce(&AngleSum::empty()).unwrap();
        assert_eq!(r.z, gi(1, 0));
        assert_eq!(r.pi_multiple, 0);

        // atan 2 + atan 1/7 + atan 1/3 = π/2: (1+2i)(7+i)(3+i) = 50i
        let r = reduce(&sum(vec![term(1, 2, 1), term(1, 1, 7), term(1, 1, 3)])).unwrap();
        assert_eq!(r.z, gi(0, 1));
        assert_eq!(r.pi_multiple, 0);

        // 8 atan 1 = 2pi: z = (1,0) but k = 2, not the zero angle.
        let r = reduce(&sum(vec![term(8, 1, 1)])).unwrap();
        assert_eq!(r.z, gi(1, 0));
        assert_eq!(r.pi_multiple, 2);
        assert!(!is_zero(&sum(vec![term(8, 1, 1)])).unwrap());
    }

    #[test]
    fn is_zero_examples() {
        assert!(is_zero(&sum(vec![term(1, 1, 2), term(1, 1, 3), term(-1, 1, 1)])).unwrap());
        assert!(is_zero(&AngleSum::empty()).unwrap());
        assert!(!is_zero(&sum(vec![term(1, 1, 1)])).unwrap());
    }

    #[test]
    fn equals_examples() {
        // π/4 + atan 1/3 = atan 2
        let lhs = sum(vec![term(1, 1, 1), term(1, 1, 3)]);
        let rhs = sum(vec![term(1, 2, 1)]);
        assert!(equals(&lhs, &rhs).unwrap());

        // reflexivity on an arbitrary sum
        let a = sum(vec![term(2, 3, 7), term(-1, 1, 4), term(3, 0, 1)]);
        assert!(equals(&a, &a).unwrap());

        // atan 3/5 = atan 3/4 - atan 3/29: (4+3i)(29-3i) = 125+75i
        let lhs = sum(vec![term(1, 3, 5)]);
        let rhs = sum(vec![term(1, 3, 4), term(-1, 3, 29)]);
        assert!(equals(&lhs, &rhs).unwrap());

        // inequality is detected
        assert!(!equals(&sum(vec![term(1, 1, 2)]), &sum(vec![term(1, 1, 3)])).unwrap());
    }

    #[test]
    fn certified_value_examples() {
        let b = certified_value(&sum(vec![term(1, 1, 1)]), 64);
        assert!(b.intersects(&crate::ball::pi_quarter_ball(100)));
        assert!(b.radius_leq_pow2(2, -63));

        let b = certified_value(&AngleSum::empty(), 64);
        assert!(b.is_exact_zero());

        let b = certified_value(&sum(vec![term(1, 2, 1)]), 64);
        // atan 2 = 1.10714871779...
        assert!(b.lower_bound() > ratio(110714, 100000));
        assert!(b.upper_bound() < ratio(110715, 100000));
    }

    #[test]
    fn zero_argument_terms_are_inert() {
        let with_zeros = sum(vec![term(2, 0, 1), term(1, 1, 2), term(5, 0, 3)]);
        let without = sum(vec![term(1, 1, 2)]);
        assert!(equals(&with_zeros, &without).unwrap());
    }

    #[test]
    fn scaling_matches_concatenation() {
        let a = sum(vec![term(1, 2, 5), term(-2, 1, 9), term(1, 4, 3)]);
        assert!(equals(&a.scaled(2), &a.concat(&a)).unwrap());
    }
}
