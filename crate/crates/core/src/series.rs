//! Certified evaluation of the infinite catalog identities: partial sums
//! as balls, rigorous geometric tail bounds, and the constants π/4 and
//! `atan(1/φ)`.
//!
//! Tail rigor rests on two facts checked by the test suite: arctangent
//! arguments decrease monotonically in `n` for every catalog family, and
//! same-family consecutive arguments shrink by a factor of at least 2
//! (from `F_{k+2} >= 2 F_k` and `L_{k+2} >= 2 L_k`, `k >= 1`). Monotone
//! tails therefore sum to at most twice their first omitted term;
//! alternating tails are bounded by the first omitted term alone.

use num_bigint::BigInt;

use crate::angle::certified_value;
use crate::ball::{atan_ratio, golden_arctan_ball, pi_quarter_ball, CertifiedReal};
use crate::catalog::{closed_form, term_generator, ClosedForm, IdentityId, Status};
use crate::error::{Error, Result};
use crate::rational::{pow10_inv, rational_abs, Rational};

/// Ball containing π/4 with radius at most `2^-precision_bits`.
pub fn pi_quarter(precision_bits: u32) -> CertifiedReal {
    pi_quarter_ball(precision_bits)
}

/// Ball containing `atan(1/φ)` with radius at most `2^-precision_bits`.
pub fn golden_arctan(precision_bits: u32) -> CertifiedReal {
    golden_arctan_ball(precision_bits)
}

/// Rigorous upper bound on the absolute tail `|Σ_{n>N} term(n)|` of an
/// infinite identity.
#[derive(Debug, Clone)]
pub struct TailBound {
    pub after_index: u64,
    pub bound: Rational,
}

/// Tail bound after `n_after >= 1` terms: the first omitted term's
/// `|coeff| * arg` for alternating series, twice that for monotone ones
/// (`atan x <= x` plus the geometric halving of arguments).
pub fn tail_bound(id: IdentityId, m: i64, n_after: u64) -> Result<TailBound> {
    if n_after < 1 {
        return Err(Error::InvalidParameter(format!(
            "tail bound needs N >= 1 (got {n_after})"
        )));
    }
    let series = term_generator(id, m)?;
    let next = series.term(n_after + 1);
    let factor: i64 = if series.is_alternating() { 1 } else { 2 };
    let scale = Rational::from_integer(BigInt::from(next.coeff().abs() * factor));
    Ok(TailBound {
        after_index: n_after,
        bound: scale * rational_abs(next.arg()),
    })
}

/// Certified comparison of an infinite identity against its closed form.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub m: Option<i64>,
    pub digits: u32,
    pub lhs: CertifiedReal,
    pub rhs: CertifiedReal,
    pub terms_used: u64,
    pub status: Status,
}

/// Evaluates the right-hand side of an infinite identity as a ball.
pub fn closed_form_ball(id: IdentityId, m: i64, bits: u32) -> Result<CertifiedReal> {
    Ok(match closed_form(id, m)? {
        ClosedForm::RationalAngles(sum) => certified_value(&sum, bits),
        ClosedForm::GoldenArctan => golden_arctan_ball(bits),
        ClosedForm::PiQuarter => pi_quarter_ball(bits),
    })
}

/// Partial sum `S_N` of the series side as a ball at `bits` precision
/// (no tail accounted).
pub fn partial_sum_ball(id: IdentityId, m: i64, n_terms: u64, bits: u32) -> Result<CertifiedReal> {
    let series = term_generator(id, m)?;
    let mut acc = CertifiedReal::exact_zero();
    for n in 1..=n_terms {
        let t = series.term(n);
        let ball = atan_ratio(t.arg().numer(), t.arg().denom(), bits);
        acc = acc.add(&ball.mul_i64(t.coeff()));
    }
    Ok(acc)
}

fn bits_for_digits(digits: u32) -> u32 {
    // ceil(digits * log2(10)) with a little headroom, in pure integers
    ((digits as u64 * 332_193).div_ceil(100_000)) as u32 + 8
}

/// Verifies an infinite identity to `digits` certified decimal digits.
///
/// The term count is chosen so the tail bound is at most one quarter of
/// the digit tolerance, the working precision so rounding stays within
/// another quarter; the remaining half is slack. `verified` requires the
/// two balls to intersect with both radii at most `10^-digits`;
/// disjoint balls falsify; oversized radii are reported `inconclusive`
/// rather than silently accepted.
pub fn verify_infinite(id: IdentityId, m: i64, digits: u32) -> Result<VerificationReport> {
    if digits < 1 {
        return Err(Error::InvalidParameter(format!(
            "digits must be >= 1 (got {digits})"
        )));
    }
    term_generator(id, m)?; // validates kind, arity, parity
    let quarter_tol = pow10_inv(digits, 4);
    let tol = pow10_inv(digits, 1);

    let mut n_terms = 1u64;
    let mut tb = tail_bound(id, m, n_terms)?;
    while tb.bound > quarter_tol {
        n_terms += 1;
        tb = tail_bound(id, m, n_terms)?;
    }

    let base_bits = bits_for_digits(digits);
    let mut extra = 32 + 64 - n_terms.leading_zeros();
    let info = id.info()?;
    let m_out = if info.arity == crate::catalog::Arity::MOnly {
        Some(m)
    } else {
        None
    };
    loop {
        let w = base_bits + extra;
        let lhs = partial_sum_ball(id, m, n_terms, w)?.widen(&tb.bound);
        let rhs = closed_form_ball(id, m, w)?;
        let radii_ok = lhs.radius_leq(&tol) && rhs.radius_leq(&tol);
        if radii_ok {
            let status = if lhs.intersects(&rhs) {
                Status::Verified
            } else {
                Status::Falsified
            };
            return Ok(VerificationReport {
                id,
                m: m_out,
                digits,
                lhs,
                rhs,
                terms_used: n_terms,
                status,
            });
        }
        if w >= (1 << 20) {
            return Ok(VerificationReport {
                id,
                m: m_out,
                digits,
                lhs,
                rhs,
                terms_used: n_terms,
                status: Status::Inconclusive,
            });
        }
        extra *= 2;
    }
}
