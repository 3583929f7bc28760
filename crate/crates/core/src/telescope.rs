//! Generic finite telescoping and doubling identities over arbitrary
//! rational sequences, verified exactly.
//!
//! Every operation returns both sides of its identity instead of a
//! boolean, so a failing check exposes the witness values. Sequences are
//! 1-indexed to match the usual `Σ_{n=1}` conventions; storage is
//! 0-based internally.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Finite ordered list of rationals, `X_1 … X_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSequence {
    values: Vec<Rational>,
}

impl RationalSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        RationalSequence { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access; panics out of range (length is validated by every
    /// operation up front).
    fn at(&self, n: usize) -> &Rational {
        &self.values[n - 1]
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.values.len() < needed {
            Err(Error::SequenceTooShort {
                needed,
                len: self.values.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn alt_sign(n: usize) -> i64 {
    // (-1)^(n-1)
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}

fn signed(x: &Rational, sign: i64) -> Rational {
    if sign >= 0 {
        x.clone()
    } else {
        -x
    }
}

/// Plain telescoping exchange:
/// `Σ_{n=1..k} (X_n - X_{n+m})` vs `Σ_{n=1..m} (X_n - X_{n+k})`.
pub fn telescope_diff(x: &RationalSequence, k: usize, m: usize) -> Result<(Rational, Rational)> {
    x.require(k + m)?;
    let mut lhs = Rational::zero();
    for n in 1..=k {
        lhs += x.at(n) - x.at(n + m);
    }
    let mut rhs = Rational::zero();
    for n in 1..=m {
        rhs += x.at(n) - x.at(n + k);
    }
    Ok((lhs, rhs))
}

/// Alternating telescoping exchange. For even `m` the left side is
/// `Σ (-1)^(n-1) (X_n - X_{n+m})`, for odd `m` it is
/// `Σ (-1)^(n-1) (X_n + X_{n+m})`; in both cases the right side is
/// `Σ_{n=1..m} (-1)^(n-1) X_n + (-1)^(k-1) Σ_{n=1..m} (-1)^(n-1) X_{n+k}`.
pub fn telescope_alt(x: &RationalSequence, k: usize, m: usize) -> Result<(Rational, Rational)> {
    x.require(k + m)?;
    let m_even = m.is_multiple_of(2);
    let mut lhs = Rational::zero();
    for n in 1..=k {
        let inner = if m_even {
            x.at(n) - x.at(n + m)
        } else {
            x.at(n) + x.at(n + m)
        };
        lhs += signed(&inner, alt_sign(n));
    }
    let mut head = Rational::zero();
    let mut shifted = Rational::zero();
    for n in 1..=m {
        head += signed(x.at(n), alt_sign(n));
        shifted += signed(x.at(n + k), alt_sign(n));
    }
    let rhs = head + signed(&shifted, alt_sign(k));
    Ok((lhs, rhs))
}

/// Doubling identity:
/// `2 Σ_{n=1..t} X_n` vs
/// `Σ_{n=1..t} (X_n + X_{n+m}) + Σ_{n=1..m} X_n - Σ_{n=t+1..t+m} X_n`.
pub fn double_shift(x: &RationalSequence, t: usize, m: usize) -> Result<(Rational, Rational)> {
    x.require(t + m)?;
    let mut lhs = Rational::zero();
    for n in 1..=t {
        lhs += x.at(n);
    }
    lhs += lhs.clone();
    let mut rhs = Rational::zero();
    for n in 1..=t {
        rhs += x.at(n) + x.at(n + m);
    }
    for n in 1..=m {
        rhs += x.at(n);
    }
    for n in (t + 1)..=(t + m) {
        rhs -= x.at(n);
    }
    Ok((lhs, rhs))
}

/// Alternating doubling identity:
/// `2 Σ_{n=1..t} (-1)^(n-1) X_n` vs
/// `Σ_{n=1..t} (-1)^(n-1) (X_n ∓ X_{n+m}) + Σ_{n=1..m} (-1)^(n-1) X_n
///  - Σ_{n=t+1..t+m} (-1)^(n-1) X_n`
/// with the difference form for odd `m` and the sum form for even `m`.
pub fn double_shift_alt(x: &RationalSequence, t: usize, m: usize) -> Result<(Rational, Rational)> {
    x.require(t + m)?;
    let m_odd = m % 2 == 1;
    let mut lhs = Rational::zero();
    for n in 1..=t {
        lhs += signed(x.at(n), alt_sign(n));
    }
    lhs += lhs.clone();
    let mut rhs = Rational::zero();
    for n in 1..=t {
        let inner = if m_odd {
            x.at(n) - x.at(n + m)
        } else {
            x.at(n) + x.at(n + m)
        };
        rhs += signed(&inner, alt_sign(n));
    }
    for n in 1..=m {
        rhs += signed(x.at(n), alt_sign(n));
    }
    for n in (t + 1)..=(t + m) {
        rhs -= signed(x.at(n), alt_sign(n));
    }
    Ok((lhs, rhs))
}

/// Intermediate identity from the doubling proof chain, exposed for
/// property checks:
/// `Σ_{n=1..t} (X_{n+m} + X_n)` vs
/// `2 Σ_{n=1..t} X_n + Σ_{n=t+1..t+m} X_n - Σ_{n=1..m} X_n`.
pub fn double_shift_chain(
    x: &RationalSequence,
    t: usize,
    m: usize,
) -> Result<(Rational, Rational)> {
    x.require(t + m)?;
    let mut lhs = Rational::zero();
    for n in 1..=t {
        lhs += x.at(n + m) + x.at(n);
    }
    let mut rhs = Rational::zero();
    for n in 1..=t {
        rhs += x.at(n);
    }
    rhs += rhs.clone();
    for n in (t + 1)..=(t + m) {
        rhs += x.at(n);
    }
    for n in 1..=m {
        rhs -= x.at(n);
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn seq(vals: &[i64]) -> RationalSequence {
        RationalSequence::new(vals.iter().map(|&v| ratio(v, 1)).collect())
    }

    #[test]
    fn diff_examples() {
        let x = seq(&[1, 2, 3, 4, 5]);
        let (l, r) = telescope_diff(&x, 3, 2).unwrap();
        assert_eq!(l, ratio(-6, 1));
        assert_eq!(r, ratio(-6, 1));

        let c = seq(&[7, 7, 7, 7, 7, 7]);
        for k in 0..=3 {
            for m in 0..=(6 - k) {
                let (l, r) = telescope_diff(&c, k, m).unwrap();
                assert_eq!(l, ratio(0, 1));
                assert_eq!(r, ratio(0, 1));
            }
        }

        let (l, r) = telescope_diff(&x, 0, 4).unwrap();
        assert_eq!(l, ratio(0, 1));
        assert_eq!(r, ratio(0, 1));
    }

    #[test]
    fn alt_examples() {
        let x = seq(&[1, 2, 3, 4, 5, 6]);
        let (l, r) = telescope_alt(&x, 2, 2).unwrap();
        assert_eq!(l, ratio(0, 1));
        assert_eq!(r, ratio(0, 1));

        let (l, r) = telescope_alt(&x, 3, 0).unwrap();
        assert_eq!(l, ratio(0, 1));
        assert_eq!(r, ratio(0, 1));

        let ones = seq(&[1, 1, 1, 1]);
        let (l, r) = telescope_alt(&ones, 2, 1).unwrap();
        assert_eq!(l, ratio(0, 1));
        assert_eq!(r, ratio(0, 1));
    }

    #[test]
    fn double_examples() {
        let x = seq(&[1, 2, 3, 4]);
        let (l, r) = double_shift(&x, 2, 2).unwrap();
        assert_eq!(l, ratio(6, 1));
        assert_eq!(r, ratio(6, 1));

        let (l, r) = double_shift(&x, 3, 0).unwrap();
        assert_eq!(l, r);

        let (l, r) = double_shift(&x, 0, 3).unwrap();
        assert_eq!(l, ratio(0, 1));
        assert_eq!(r, ratio(0, 1));
    }

    #[test]
    fn double_alt_examples() {
        let x = seq(&[1, 2, 3, 4]);
        let (l, r) = double_shift_alt(&x, 2, 1).unwrap();
        assert_eq!(l, ratio(-2, 1));
        assert_eq!(r, ratio(-2, 1));

        let (l, r) = double_shift_alt(&x, 3, 0).unwrap();
        assert_eq!(l, r);

        let c = seq(&[5, 5, 5, 5, 5, 5]);
        for m in 0..=3 {
            let (l, r) = double_shift_alt(&c, 2, m).unwrap();
            assert_eq!(l, ratio(0, 1));
            assert_eq!(r, ratio(0, 1));
        }
    }

    #[test]
    fn length_errors() {
        let x = seq(&[1, 2, 3]);
        assert!(matches!(
            telescope_diff(&x, 2, 2),
            Err(Error::SequenceTooShort { needed: 4, len: 3 })
        ));
        assert!(telescope_alt(&x, 4, 0).is_err());
        assert!(double_shift(&x, 0, 4).is_err());
        assert!(double_shift_alt(&x, 2, 2).is_err());
    }
}
