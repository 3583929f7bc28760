//! Fibonacci and Lucas numbers at arbitrary precision, for any integer
//! index, plus exact checks of the classical algebraic identities that
//! relate them.
//!
//! Negative indices follow the reflection rules
//! `F(-n) = (-1)^(n-1) F(n)` and `L(-n) = (-1)^n L(n)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, ParityConstraint, Result};

/// `(F_n, F_{n+1})` by index doubling, `O(log n)` multiplications.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero(); // F_0
    let mut b = BigInt::one(); // F_1
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        // F_{2k} = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2
        let c = &a * ((&b << 1u32) - &a);
        let d = &a * &a + &b * &b;
        if (n >> i) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// Exact `F_n` for any integer `n`.
pub fn fib(n: i64) -> BigInt {
    let k = n.unsigned_abs();
    let (f, _) = fib_pair(k);
    if n >= 0 || k % 2 == 1 {
        f
    } else {
        -f
    }
}

/// Exact `L_n` for any integer `n`.
pub fn lucas(n: i64) -> BigInt {
    let k = n.unsigned_abs();
    let (f, f1) = fib_pair(k);
    // L_k = 2 F_{k+1} - F_k
    let l = (&f1 << 1u32) - &f;
    if n >= 0 || k.is_multiple_of(2) {
        l
    } else {
        -l
    }
}

/// Shared table of consecutive Fibonacci and Lucas values.
///
/// Sweeps touch indices densely, so the cache extends linearly from the
/// seeds; isolated lookups that never go through a cache use [`fib`] /
/// [`lucas`], which are logarithmic. Negative indices are answered by
/// reflection and are not stored.
pub struct SequenceCache {
    inner: RwLock<Columns>,
}

struct Columns {
    fib: Vec<BigInt>,
    lucas: Vec<BigInt>,
}

impl SequenceCache {
    pub fn new() -> Self {
        SequenceCache {
            inner: RwLock::new(Columns {
                fib: vec![BigInt::zero(), BigInt::one()],
                lucas: vec![BigInt::from(2), BigInt::one()],
            }),
        }
    }

    fn ensure(&self, upto: usize) {
        {
            let cols = self.inner.read().unwrap();
            if cols.fib.len() > upto {
                return;
            }
        }
        let mut cols = self.inner.write().unwrap();
        while cols.fib.len() <= upto {
            let n = cols.fib.len();
            let f = &cols.fib[n - 1] + &cols.fib[n - 2];
            let l = &cols.lucas[n - 1] + &cols.lucas[n - 2];
            cols.fib.push(f);
            cols.lucas.push(l);
        }
    }

    pub fn fib(&self, n: i64) -> BigInt {
        let k = n.unsigned_abs() as usize;
        self.ensure(k);
        let v = self.inner.read().unwrap().fib[k].clone();
        if n >= 0 || k % 2 == 1 {
            v
        } else {
            -v
        }
    }

    pub fn lucas(&self, n: i64) -> BigInt {
        let k = n.unsigned_abs() as usize;
        self.ensure(k);
        let v = self.inner.read().unwrap().lucas[k].clone();
        if n >= 0 || k.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

impl Default for SequenceCache {
    fn default() -> Self {
        Self::new()
    }
}

fn global_cache() -> &'static SequenceCache {
    static CACHE: OnceLock<SequenceCache> = OnceLock::new();
    CACHE.get_or_init(SequenceCache::new)
}

/// `F_n` through the process-wide cache.
pub fn fib_cached(n: i64) -> BigInt {
    global_cache().fib(n)
}

/// `L_n` through the process-wide cache.
pub fn lucas_cached(n: i64) -> BigInt {
    global_cache().lucas(n)
}

/// The fourteen two-index algebraic identity families relating Fibonacci
/// and Lucas numbers (products, shifted sums and differences, and the
/// norm-like square forms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraicFamily {
    /// `F_{2m} = F_m L_m`
    Alg09,
    /// `F_n L_m + L_n F_m = 2 F_{m+n}`
    Alg10,
    /// `F_{n+2m} - F_n = L_m F_{n+m}`, m odd
    Alg11,
    /// `F_{n+2m} - F_n = F_m L_{n+m}`, m even
    Alg12,
    /// `F_{n+2m} + F_n = F_m L_{n+m}`, m odd
    Alg13,
    /// `F_{n+2m} + F_n = L_m F_{n+m}`, m even
    Alg14,
    /// `L_{n+2m} - L_n = L_m L_{n+m}`, m odd
    Alg15,
    /// `L_{n+2m} - L_n = 5 F_m F_{n+m}`, m even
    Alg16,
    /// `L_{n+2m} + L_n = 5 F_m F_{n+m}`, m odd
    Alg17,
    /// `L_{n+2m} + L_n = L_m L_{n+m}`, m even
    Alg18,
    /// `F_n F_{n+2m} = F_{n+m}^2 + F_m^2`, n odd
    Alg19,
    /// `F_n F_{n+2m} = F_{n+m}^2 - F_m^2`, n even
    Alg20,
    /// `L_n L_{n+2m} = 5 F_{n+m}^2 - L_m^2`, n odd
    Alg21,
    /// `L_n L_{n+2m} = 5 F_{n+m}^2 + L_m^2`, n even
    Alg22,
}

impl AlgebraicFamily {
    pub const ALL: [AlgebraicFamily; 14] = [
        AlgebraicFamily::Alg09,
        AlgebraicFamily::Alg10,
        AlgebraicFamily::Alg11,
        AlgebraicFamily::Alg12,
        AlgebraicFamily::Alg13,
        AlgebraicFamily::Alg14,
        AlgebraicFamily::Alg15,
        AlgebraicFamily::Alg16,
        AlgebraicFamily::Alg17,
        AlgebraicFamily::Alg18,
        AlgebraicFamily::Alg19,
        AlgebraicFamily::Alg20,
        AlgebraicFamily::Alg21,
        AlgebraicFamily::Alg22,
    ];

    pub fn parity(self) -> ParityConstraint {
        use AlgebraicFamily::*;
        match self {
            Alg09 | Alg10 => ParityConstraint::None,
            Alg11 | Alg13 | Alg15 | Alg17 => ParityConstraint::MOdd,
            Alg12 | Alg14 | Alg16 | Alg18 => ParityConstraint::MEven,
            Alg19 | Alg21 => ParityConstraint::NOdd,
            Alg20 | Alg22 => ParityConstraint::NEven,
        }
    }

    /// Canonical name, `ALG-09` .. `ALG-22`.
    pub fn name(self) -> &'static str {
        use AlgebraicFamily::*;
        match self {
            Alg09 => "ALG-09",
            Alg10 => "ALG-10",
            Alg11 => "ALG-11",
            Alg12 => "ALG-12",
            Alg13 => "ALG-13",
            Alg14 => "ALG-14",
            Alg15 => "ALG-15",
            Alg16 => "ALG-16",
            Alg17 => "ALG-17",
            Alg18 => "ALG-18",
            Alg19 => "ALG-19",
            Alg20 => "ALG-20",
            Alg21 => "ALG-21",
            Alg22 => "ALG-22",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase();
        AlgebraicFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Evaluates both sides of the family's identity at `(m, n)` exactly and
/// compares. `false` always means "identity falsified": violating the
/// family's parity constraint is an error, not a `false`.
pub fn check_algebraic_identity(family: AlgebraicFamily, m: i64, n: i64) -> Result<bool> {
    if m < 0 || n < 0 {
        return Err(Error::InvalidParameter(format!(
            "{} requires m, n >= 0 (got m={m}, n={n})",
            family.name()
        )));
    }
    if !family.parity().admits(m, n) {
        let got = match family.parity() {
            ParityConstraint::NOdd | ParityConstraint::NEven => n,
            _ => m,
        };
        return Err(Error::ParityViolation {
            context: family.name().to_string(),
            required: family.parity().label(),
            got,
        });
    }
    let f = fib_cached;
    let l = lucas_cached;
    let five = BigInt::from(5);
    use AlgebraicFamily::*;
    let (lhs, rhs) = match family {
        Alg09 => (f(2 * m), f(m) * l(m)),
        Alg10 => (f(n) * l(m) + l(n) * f(m), BigInt::from(2) * f(m + n)),
        Alg11 => (f(n + 2 * m) - f(n), l(m) * f(n + m)),
        Alg12 => (f(n + 2 * m) - f(n), f(m) * l(n + m)),
        Alg13 => (f(n + 2 * m) + f(n), f(m) * l(n + m)),
        Alg14 => (f(n + 2 * m) + f(n), l(m) * f(n + m)),
        Alg15 => (l(n + 2 * m) - l(n), l(m) * l(n + m)),
        Alg16 => (l(n + 2 * m) - l(n), &five * f(m) * f(n + m)),
        Alg17 => (l(n + 2 * m) + l(n), &five * f(m) * f(n + m)),
        Alg18 => (l(n + 2 * m) + l(n), l(m) * l(n + m)),
        Alg19 => {
            let s = f(n + m);
            let t = f(m);
            (f(n) * f(n + 2 * m), &s * &s + &t * &t)
        }
        Alg20 => {
            let s = f(n + m);
            let t = f(m);
            (f(n) * f(n + 2 * m), &s * &s - &t * &t)
        }
        Alg21 => {
            let s = f(n + m);
            let t = l(m);
            (l(n) * l(n + 2 * m), &five * &s * &s - &t * &t)
        }
        Alg22 => {
            let s = f(n + m);
            let t = l(m);
            (l(n) * l(n + 2 * m), &five * &s * &s + &t * &t)
        }
    };
    Ok(lhs == rhs)
}
