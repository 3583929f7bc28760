//! Gaussian integers as exact carriers of arctangent sums.
//!
//! `arctan(p/q)` is the argument of `q + p*i`, so a formal integer
//! combination of arctangents maps to a product of Gaussian integers
//! whose argument is the combined angle modulo 2π. Only the argument is
//! of interest, so positive real scale factors are stripped eagerly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Complex number with exact integer components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    /// The multiplicative identity `1 + 0i` (also the zero-angle carrier).
    pub fn one() -> Self {
        GaussianInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn mul(&self, other: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn conj(&self) -> GaussianInt {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Divides out `gcd(|re|, |im|)`. No sign flip is ever applied: the
    /// sign pattern carries the argument, and flipping it would shift the
    /// argument by π.
    pub fn primitive(&self) -> GaussianInt {
        let g = self.re.abs().gcd(&self.im.abs());
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        GaussianInt {
            re: &self.re / &g,
            im: &self.im / &g,
        }
    }

    /// True iff this is exactly `1 + 0i`.
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True iff the argument is exactly zero, i.e. the number lies on the
    /// positive real axis.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    /// `self^k` for `k >= 0`, reduced to primitive form after every
    /// multiplication to keep component sizes near-minimal.
    pub fn pow_primitive(&self, k: u64) -> GaussianInt {
        let mut acc = GaussianInt::one();
        let mut base = self.primitive();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).primitive();
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).primitive();
            }
        }
        acc
    }
}

impl std::fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
