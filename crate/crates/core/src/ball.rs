//! Midpoint-radius ball arithmetic over dyadic numbers, plus certified
//! evaluations of arctangents, π and √5.
//!
//! A ball is `(mid ± rad) / 2^scale` with exact integer `mid` and `rad`;
//! every operation propagates radii conservatively, so the true value is
//! always inside the reported interval. Addition, negation and integer
//! scaling are exact after scale alignment; the only rounding happens
//! inside the series kernels, where it is accounted for in integer ulps.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Arbitrary-precision enclosure of a real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedReal {
    mid: BigInt,
    rad: BigInt,
    scale: u32,
}

fn shl(x: &BigInt, k: u32) -> BigInt {
    x << (k as usize)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    // b > 0
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Nearest integer to `a/b` for `b > 0`, ties away from the floor.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    ((a << 1u32) + b).div_floor(&(b << 1u32))
}

impl CertifiedReal {
    /// The exact number 0 with zero radius.
    pub fn exact_zero() -> Self {
        CertifiedReal {
            mid: BigInt::zero(),
            rad: BigInt::zero(),
            scale: 0,
        }
    }

    pub(crate) fn from_parts(mid: BigInt, rad: BigInt, scale: u32) -> Self {
        debug_assert!(!rad.is_negative());
        CertifiedReal { mid, rad, scale }
    }

    /// Encloses the exact rational `r` at `bits` fractional bits
    /// (radius one ulp).
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let mid = round_div(&shl(r.numer(), bits), r.denom());
        CertifiedReal {
            mid,
            rad: BigInt::one(),
            scale: bits,
        }
    }

    pub fn scale_bits(&self) -> u32 {
        self.scale
    }

    pub fn is_exact_zero(&self) -> bool {
        self.mid.is_zero() && self.rad.is_zero()
    }

    fn aligned(&self, scale: u32) -> (BigInt, BigInt) {
        debug_assert!(scale >= self.scale);
        let d = scale - self.scale;
        (shl(&self.mid, d), shl(&self.rad, d))
    }

    pub fn add(&self, other: &CertifiedReal) -> CertifiedReal {
        let scale = self.scale.max(other.scale);
        let (m1, r1) = self.aligned(scale);
        let (m2, r2) = other.aligned(scale);
        CertifiedReal {
            mid: m1 + m2,
            rad: r1 + r2,
            scale,
        }
    }

    pub fn neg(&self) -> CertifiedReal {
        CertifiedReal {
            mid: -&self.mid,
            rad: self.rad.clone(),
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &CertifiedReal) -> CertifiedReal {
        self.add(&other.neg())
    }

    /// Exact scaling by a machine integer.
    pub fn mul_i64(&self, k: i64) -> CertifiedReal {
        let kb = BigInt::from(k);
        CertifiedReal {
            mid: &self.mid * &kb,
            rad: &self.rad * kb.abs(),
            scale: self.scale,
        }
    }

    /// Grows the radius by (at least) the non-negative rational `extra`.
    pub fn widen(&self, extra: &Rational) -> CertifiedReal {
        debug_assert!(!extra.is_negative());
        let bump = ceil_div(&shl(extra.numer(), self.scale), extra.denom());
        CertifiedReal {
            mid: self.mid.clone(),
            rad: &self.rad + bump,
            scale: self.scale,
        }
    }

    /// Exact lower endpoint as a rational.
    pub fn lower_bound(&self) -> Rational {
        Rational::new(&self.mid - &self.rad, shl(&BigInt::one(), self.scale))
    }

    /// Exact upper endpoint as a rational.
    pub fn upper_bound(&self) -> Rational {
        Rational::new(&self.mid + &self.rad, shl(&BigInt::one(), self.scale))
    }

    /// Exact radius as a rational.
    pub fn radius(&self) -> Rational {
        Rational::new(self.rad.clone(), shl(&BigInt::one(), self.scale))
    }

    /// Exact midpoint as a rational.
    pub fn midpoint(&self) -> Rational {
        Rational::new(self.mid.clone(), shl(&BigInt::one(), self.scale))
    }

    /// `sup |x|` over the ball, as a rational.
    pub fn abs_upper_bound(&self) -> Rational {
        Rational::new(self.mid.abs() + &self.rad, shl(&BigInt::one(), self.scale))
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        // |r - mid/2^s| <= rad/2^s  <=>  |r.num*2^s - mid*r.den| <= rad*r.den
        let lhs = (shl(r.numer(), self.scale) - &self.mid * r.denom()).abs();
        lhs <= &self.rad * r.denom()
    }

    pub fn contains(&self, other: &CertifiedReal) -> bool {
        let scale = self.scale.max(other.scale);
        let (m1, r1) = self.aligned(scale);
        let (m2, r2) = other.aligned(scale);
        &m1 - &r1 <= &m2 - &r2 && m2 + r2 <= m1 + r1
    }

    pub fn intersects(&self, other: &CertifiedReal) -> bool {
        let scale = self.scale.max(other.scale);
        let (m1, r1) = self.aligned(scale);
        let (m2, r2) = other.aligned(scale);
        (&m1 - &r1).max(&m2 - &r2) <= (m1 + r1).min(m2 + r2)
    }

    /// `radius <= c * 2^e` (exact).
    pub fn radius_leq_pow2(&self, c: u64, e: i64) -> bool {
        let s = self.scale as i64 + e;
        let c = BigInt::from(c);
        if s >= 0 {
            self.rad <= shl(&c, s as u32)
        } else {
            shl(&self.rad, (-s) as u32) <= c
        }
    }

    /// `radius <= r` (exact rational comparison).
    pub fn radius_leq(&self, r: &Rational) -> bool {
        &self.rad * r.denom() <= shl(r.numer(), self.scale)
    }

    /// Midpoint rendered with `digits` decimal places, round-to-nearest.
    pub fn decimal_string(&self, digits: u32) -> String {
        let p10 = BigInt::from(10u32).pow(digits);
        let scaled = round_div(&(&self.mid * &p10), &shl(&BigInt::one(), self.scale));
        let neg = scaled.is_negative();
        let a = scaled.abs();
        let (ip, fp) = a.div_rem(&p10);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp:0>width$}", width = digits as usize)
        }
    }

    /// Decimal upper bound on the radius: `"0"` for exact balls, else
    /// `"1e-K"` with the largest `K` such that `radius <= 10^-K`
    /// (or `"1e+K"` with the smallest such `K` when the radius exceeds 1).
    pub fn radius_decimal_upper(&self) -> String {
        if self.rad.is_zero() {
            return "0".to_string();
        }
        let two_s = shl(&BigInt::one(), self.scale);
        let ten = BigInt::from(10u32);
        if self.rad <= two_s {
            // largest K >= 0 with rad * 10^K <= 2^scale
            let mut k = 0u32;
            let mut cur = self.rad.clone();
            loop {
                let next = &cur * &ten;
                if next <= two_s {
                    cur = next;
                    k += 1;
                } else {
                    break;
                }
            }
            format!("1e-{k}")
        } else {
            let mut k = 0u32;
            let mut bound = two_s;
            while self.rad > bound {
                bound *= &ten;
                k += 1;
            }
            format!("1e+{k}")
        }
    }
}

/// `arctan(x)` for `0 <= x <= 1/2` by the alternating power series in
/// fixed point, with integer ulp accounting. Internal scale carries 64
/// guard bits; the returned radius is at most `(7N + 8) / 2^(bits+64)`
/// for `N` accumulated terms, far below `2^-bits`.
fn atan_small(num: &BigInt, den: &BigInt, bits: u32) -> CertifiedReal {
    debug_assert!(!num.is_negative() && den.is_positive());
    debug_assert!(&(num << 1u32) <= den);
    let w = bits + 64;
    let x = shl(num, w).div_floor(den);
    let x2 = (&x * &x).div_floor(&shl(&BigInt::one(), w));
    let mut p = x;
    let mut acc = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    let mut positive = true;
    let two_w = shl(&BigInt::one(), w);
    while !p.is_zero() {
        let term = p.div_floor(&BigInt::from(2 * k + 1));
        if positive {
            acc += term;
        } else {
            acc -= term;
        }
        p = (&p * &x2).div_floor(&two_w);
        terms += 1;
        k += 1;
        positive = !positive;
    }
    let rad = BigInt::from(7 * terms + 8);
    CertifiedReal::from_parts(acc, rad, w)
}

fn pi_quarter_uncached(bits: u32) -> CertifiedReal {
    // Machin: pi/4 = 4 atan(1/5) - atan(1/239)
    let a = atan_small(&BigInt::one(), &BigInt::from(5), bits + 4);
    let b = atan_small(&BigInt::one(), &BigInt::from(239), bits + 4);
    a.mul_i64(4).sub(&b)
}

/// Ball containing π/4 with radius at most `2^-bits`. Memoized per
/// precision, so repeated calls at one precision return identical balls.
pub fn pi_quarter_ball(bits: u32) -> CertifiedReal {
    static CACHE: Mutex<Option<HashMap<u32, CertifiedReal>>> = Mutex::new(None);
    let mut guard = CACHE.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    map.entry(bits)
        .or_insert_with(|| pi_quarter_uncached(bits))
        .clone()
}

/// Ball containing π/2 with radius at most `2^-bits`.
pub fn half_pi_ball(bits: u32) -> CertifiedReal {
    pi_quarter_ball(bits + 1).mul_i64(2)
}

/// Ball containing π with radius at most `2^-bits`.
pub fn pi_ball(bits: u32) -> CertifiedReal {
    pi_quarter_ball(bits + 2).mul_i64(4)
}

/// Ball containing `arctan(num/den)` with radius at most `2^-bits`.
/// Requires `den > 0`; `num` may have either sign.
pub fn atan_ratio(num: &BigInt, den: &BigInt, bits: u32) -> CertifiedReal {
    assert!(den.is_positive(), "atan_ratio requires den > 0");
    if num.is_zero() {
        return CertifiedReal::exact_zero();
    }
    if num.is_negative() {
        return atan_ratio(&-num, den, bits).neg();
    }
    if num == den {
        return pi_quarter_ball(bits);
    }
    if num > den {
        // atan(x) = pi/2 - atan(1/x)
        return half_pi_ball(bits + 1).sub(&atan_ratio(den, num, bits + 1));
    }
    if &(num << 1u32) > den {
        // 1/2 < x < 1: atan(x) = pi/4 - atan((1-x)/(1+x)), argument < 1/3
        let num2 = den - num;
        let den2 = den + num;
        return pi_quarter_ball(bits + 1).sub(&atan_small(&num2, &den2, bits + 1));
    }
    atan_small(num, den, bits)
}

/// Ball containing √5 with radius at most `2^-bits`.
pub fn sqrt5_ball(bits: u32) -> CertifiedReal {
    let w = bits + 2;
    let s = shl(&BigInt::from(5), 2 * w).sqrt();
    // s <= sqrt(5)*2^w < s+1
    CertifiedReal::from_parts((&s << 1u32) + 1, BigInt::one(), w + 1)
}

/// Ball containing `arctan(1/φ)` (φ the golden ratio) with radius at
/// most `2^-bits`. Evaluates the arctangent at the dyadic midpoint of a
/// √5 enclosure, then widens by the midpoint error (arctan is
/// 1-Lipschitz).
pub fn golden_arctan_ball(bits: u32) -> CertifiedReal {
    let w = bits + 4;
    let s5 = sqrt5_ball(w);
    // 1/φ = (√5 - 1)/2
    let xscale = s5.scale + 1;
    let xmid = &s5.mid - shl(&BigInt::one(), s5.scale);
    let base = atan_ratio(&xmid, &shl(&BigInt::one(), xscale), w);
    let slack = Rational::new(s5.rad.clone(), shl(&BigInt::one(), xscale));
    base.widen(&slack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    // Reference digits computed with an independent high-precision oracle.
    const PI_QUARTER_60: &str = "0.785398163397448309615660845819875721049292349843776455243736";
    const ATAN2_60: &str = "1.107148717794090503017065460178537040070047645401432646676539";
    const GOLDEN_ATAN_60: &str = "0.553574358897045251508532730089268520035023822700716323338270";

    fn digits_bracket(s: &str, digits: u32) -> (Rational, Rational) {
        // Truncation of the decimal string gives lo; lo + 1 ulp gives hi.
        let dot = s.find('.').unwrap();
        let txt: String = s[..dot].chars().chain(s[dot + 1..].chars()).collect();
        let take = dot + digits as usize;
        let lo_num: BigInt = txt[..take].parse().unwrap();
        let den = BigInt::from(10u32).pow(digits);
        (
            Rational::new(lo_num.clone(), den.clone()),
            Rational::new(lo_num + 1, den),
        )
    }

    fn assert_contains_constant(ball: &CertifiedReal, reference: &str, digits: u32) {
        let (lo, hi) = digits_bracket(reference, digits);
        // The true constant lies in (lo, hi); the ball must reach it.
        assert!(
            ball.upper_bound() >= lo && ball.lower_bound() <= hi,
            "ball [{}, {}] misses reference {}",
            ball.lower_bound(),
            ball.upper_bound(),
            reference
        );
    }

    #[test]
    fn pi_quarter_encloses_reference() {
        let ball = pi_quarter_ball(64);
        assert_contains_constant(&ball, PI_QUARTER_60, 55);
        assert!(ball.radius_leq_pow2(1, -64));
    }

    #[test]
    fn pi_quarter_radius_monotone() {
        let r64 = pi_quarter_ball(64).radius();
        let r128 = pi_quarter_ball(128).radius();
        assert!(r128 <= r64);
    }

    #[test]
    fn atan_examples() {
        let one = BigInt::one();
        let b = atan_ratio(&one, &one, 64);
        assert_contains_constant(&b, PI_QUARTER_60, 55);

        let b = atan_ratio(&BigInt::from(2), &one, 64);
        assert_contains_constant(&b, ATAN2_60, 55);
        assert!(b.radius_leq_pow2(1, -64));

        // 1/2 < x < 1 branch
        let b = atan_ratio(&BigInt::from(2), &BigInt::from(3), 80);
        assert!(b.radius_leq_pow2(1, -80));
        // atan(2/3) = 0.5880026035475675..., bracket it coarsely
        assert!(b.lower_bound() > ratio(58, 100));
        assert!(b.upper_bound() < ratio(59, 100));

        // negative argument is odd
        let b = atan_ratio(&BigInt::from(-2), &one, 64);
        assert!(b.upper_bound() < Rational::new(BigInt::from(-11), BigInt::from(10)));
    }

    #[test]
    fn golden_arctan_encloses_reference() {
        let ball = golden_arctan_ball(128);
        assert_contains_constant(&ball, GOLDEN_ATAN_60, 58);
        assert!(ball.radius_leq_pow2(1, -128));
    }

    #[test]
    fn sqrt5_bracket() {
        let b = sqrt5_ball(64);
        assert!(b.lower_bound() > ratio(22360, 10000));
        assert!(b.upper_bound() < ratio(22361, 10000));
        assert!(b.radius_leq_pow2(1, -64));
    }

    #[test]
    fn ball_arithmetic_is_conservative() {
        let a = CertifiedReal::from_rational(&ratio(1, 3), 40);
        assert!(a.contains_rational(&ratio(1, 3)));
        let b = a.mul_i64(3);
        assert!(b.contains_rational(&ratio(1, 1)));
        let c = b.sub(&a).sub(&a).sub(&a);
        assert!(c.contains_rational(&ratio(0, 1)));
        let wide = a.widen(&ratio(1, 7));
        assert!(wide.contains(&a));
        assert!(wide.contains_rational(&ratio(1, 3)));
    }

    #[test]
    fn decimal_rendering() {
        let b = CertifiedReal::from_rational(&ratio(-1, 8), 80);
        assert_eq!(b.decimal_string(4), "-0.1250");
        let q = pi_quarter_ball(128);
        assert_eq!(&q.decimal_string(10), "0.7853981634");
        let r = q.radius_decimal_upper();
        assert!(r.starts_with("1e-"), "radius string {r}");
        assert_eq!(CertifiedReal::exact_zero().radius_decimal_upper(), "0");
    }
}
