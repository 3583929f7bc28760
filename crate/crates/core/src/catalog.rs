//! The identity catalog: builders that render every supported
//! Fibonacci/Lucas arctangent identity as a pair of [`AngleSum`]s
//! (finite case) or a term generator plus closed form (infinite case),
//! keyed by stable identifiers.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::angle::{self, AngleSum, ArctanTerm};
use crate::error::{Error, ParityConstraint, Result};
use crate::fib::{fib_cached, lucas_cached};
use crate::gaussian::GaussianInt;
use crate::rational::make_rational;

/// Position of an identity inside its theorem or corollary group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    A,
    B,
    C,
    D,
}

impl Part {
    fn letter(self) -> char {
        match self {
            Part::A => 'a',
            Part::B => 'b',
            Part::C => 'c',
            Part::D => 'd',
        }
    }

    fn ordinal(self) -> usize {
        match self {
            Part::A => 0,
            Part::B => 1,
            Part::C => 2,
            Part::D => 3,
        }
    }
}

/// Stable identifier of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Finite alternating sum of `atan(1/F_2n)` collapsing to
    /// `atan(F_t/F_{t+1})`.
    Hr63T5,
    /// Finite doubled sum of `atan(1/L_2n)` against odd-index
    /// `atan(1/F_{2n+1})` terms.
    Hr64,
    /// Three-term difference/sum identities at a single index, positions
    /// 1-8.
    Lemma1(u8),
    /// `atan(2/L_{2n-1})` split into a Lucas and a Fibonacci arctangent.
    E33,
    /// Plain telescoped sums, positions a-d.
    Theorem1(Part),
    /// Alternating telescoped sums, positions a-b.
    Theorem2(Part),
    /// Doubled sums with boundary corrections, positions a-c.
    Theorem3(Part),
    /// Infinite alternating even-index series with golden-ratio limit.
    IE4,
    /// Infinite doubled Lucas series with limit `atan 2`.
    IE6,
    /// Infinite odd-index Fibonacci series with limit π/4.
    IE7,
    /// Limits of Theorem 1, positions a-d.
    Corollary1(Part),
    /// Limits of Theorem 2, positions a-b.
    Corollary2(Part),
    /// Limits of Theorem 3, positions a-c.
    Corollary3(Part),
}

/// Parameter shape of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arity {
    /// Finite, single truncation parameter `t`.
    TOnly,
    /// Finite, shift `m` and truncation `t`.
    MAndT,
    /// Finite per-index identity in `m` and `n >= 1`.
    MAndN,
    /// Infinite, no parameters.
    Parameterless,
    /// Infinite, shift `m` only.
    MOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Finite,
    Infinite,
}

/// Catalog listing entry.
#[derive(Debug, Clone)]
pub struct IdentityInfo {
    pub id: IdentityId,
    pub arity: Arity,
    pub parity: ParityConstraint,
    pub kind: Kind,
    pub description: &'static str,
}

/// Verification outcome. Finite (exact) checks never return
/// `Inconclusive`; certified numerical checks may.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Falsified,
    Inconclusive,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
            Status::Inconclusive => "inconclusive",
        }
    }
}

const PART2: [Part; 2] = [Part::A, Part::B];
const PART3: [Part; 3] = [Part::A, Part::B, Part::C];
const PART4: [Part; 4] = [Part::A, Part::B, Part::C, Part::D];

impl IdentityId {
    /// Every catalog entry in stable order (finite entries first).
    pub fn all() -> Vec<IdentityId> {
        let mut ids = vec![IdentityId::Hr63T5, IdentityId::Hr64];
        ids.extend((1..=8).map(IdentityId::Lemma1));
        ids.push(IdentityId::E33);
        ids.extend(PART4.iter().map(|&p| IdentityId::Theorem1(p)));
        ids.extend(PART2.iter().map(|&p| IdentityId::Theorem2(p)));
        ids.extend(PART3.iter().map(|&p| IdentityId::Theorem3(p)));
        ids.extend([IdentityId::IE4, IdentityId::IE6, IdentityId::IE7]);
        ids.extend(PART4.iter().map(|&p| IdentityId::Corollary1(p)));
        ids.extend(PART2.iter().map(|&p| IdentityId::Corollary2(p)));
        ids.extend(PART3.iter().map(|&p| IdentityId::Corollary3(p)));
        ids
    }

    /// Canonical name, e.g. `"L1-5"`, `"T3-c"`, `"I-E7"`.
    pub fn name(self) -> String {
        match self {
            IdentityId::Hr63T5 => "HR63-T5".to_string(),
            IdentityId::Hr64 => "HR64".to_string(),
            IdentityId::Lemma1(i) => format!("L1-{i}"),
            IdentityId::E33 => "E33".to_string(),
            IdentityId::Theorem1(p) => format!("T1-{}", p.letter()),
            IdentityId::Theorem2(p) => format!("T2-{}", p.letter()),
            IdentityId::Theorem3(p) => format!("T3-{}", p.letter()),
            IdentityId::IE4 => "I-E4".to_string(),
            IdentityId::IE6 => "I-E6".to_string(),
            IdentityId::IE7 => "I-E7".to_string(),
            IdentityId::Corollary1(p) => format!("C1-{}", p.letter()),
            IdentityId::Corollary2(p) => format!("C2-{}", p.letter()),
            IdentityId::Corollary3(p) => format!("C3-{}", p.letter()),
        }
    }

    /// Case-insensitive lookup by canonical name.
    pub fn parse(s: &str) -> Result<IdentityId> {
        IdentityId::all()
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }

    fn validate(self) -> Result<()> {
        match self {
            IdentityId::Lemma1(i) if !(1..=8).contains(&i) => {
                Err(Error::UnknownIdentity(format!("L1-{i}")))
            }
            IdentityId::Theorem2(p) | IdentityId::Corollary2(p) if p.ordinal() > 1 => {
                Err(Error::UnknownIdentity(self.name()))
            }
            IdentityId::Theorem3(p) | IdentityId::Corollary3(p) if p.ordinal() > 2 => {
                Err(Error::UnknownIdentity(self.name()))
            }
            _ => Ok(()),
        }
    }

    pub fn info(self) -> Result<IdentityInfo> {
        self.validate()?;
        let (arity, parity, kind, description) = match self {
            IdentityId::Hr63T5 => (
                Arity::TOnly,
                ParityConstraint::None,
                Kind::Finite,
                "sum_(n=1..t) (-1)^(n-1) atan(1/F(2n)) = atan(F(t)/F(t+1))",
            ),
            IdentityId::Hr64 => (
                Arity::TOnly,
                ParityConstraint::None,
                Kind::Finite,
                "2 sum_(n=1..t) atan(1/L(2n)) = sum_(n=1..t) atan(1/F(2n+1)) - atan(1/L(2t+2)) + atan(1/3)",
            ),
            IdentityId::Lemma1(1) => (
                Arity::MAndN,
                ParityConstraint::MEven,
                Kind::Finite,
                "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) - atan(L(m)/L(2n+3m-1))",
            ),
            IdentityId::Lemma1(2) => (
                Arity::MAndN,
                ParityConstraint::MOdd,
                Kind::Finite,
                "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) + atan(L(m)/L(2n+3m-1))",
            ),
            IdentityId::Lemma1(3) => (
                Arity::MAndN,
                ParityConstraint::MOdd,
                Kind::Finite,
                "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) - atan(F(m)/F(2n+3m-1))",
            ),
            IdentityId::Lemma1(4) => (
                Arity::MAndN,
                ParityConstraint::MEven,
                Kind::Finite,
                "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) + atan(F(m)/F(2n+3m-1))",
            ),
            IdentityId::Lemma1(5) => (
                Arity::MAndN,
                ParityConstraint::MOdd,
                Kind::Finite,
                "atan(L(m)^2 L(2n+2m) / (5 F(2n+2m)^2)) = atan(L(m)/L(2n+m)) - atan(L(m)/L(2n+3m))",
            ),
            IdentityId::Lemma1(6) => (
                Arity::MAndN,
                ParityConstraint::MEven,
                Kind::Finite,
                "atan(L(m)^2 L(2n+2m) / (5 F(2n+2m)^2)) = atan(L(m)/L(2n+m)) + atan(L(m)/L(2n+3m))",
            ),
            IdentityId::Lemma1(7) => (
                Arity::MAndN,
                ParityConstraint::MEven,
                Kind::Finite,
                "atan(F(m)^2 L(2n+2m) / F(2n+2m)^2) = atan(F(m)/F(2n+m)) - atan(F(m)/F(2n+3m))",
            ),
            IdentityId::Lemma1(_) => (
                Arity::MAndN,
                ParityConstraint::MOdd,
                Kind::Finite,
                "atan(F(m)^2 L(2n+2m) / F(2n+2m)^2) = atan(F(m)/F(2n+m)) + atan(F(m)/F(2n+3m))",
            ),
            IdentityId::E33 => (
                Arity::MAndN,
                ParityConstraint::None,
                Kind::Finite,
                "atan(2/L(2n-1)) = atan(L(m)/L(2n+m-1)) + atan(F(m)/F(2n+m-1))",
            ),
            IdentityId::Theorem1(Part::A) => (
                Arity::MAndT,
                ParityConstraint::MEven,
                Kind::Finite,
                "sum_(n=1..t) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) atan(L(m)/L(2n+m-1)) - sum_(n=1..m) atan(L(m)/L(2n+2t+m-1))",
            ),
            IdentityId::Theorem1(Part::B) => (
                Arity::MAndT,
                ParityConstraint::MOdd,
                Kind::Finite,
                "sum_(n=1..t) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) atan(F(m)/F(2n+m-1)) - sum_(n=1..m) atan(F(m)/F(2n+2t+m-1))",
            ),
            IdentityId::Theorem1(Part::C) => (
                Arity::MAndT,
                ParityConstraint::MOdd,
                Kind::Finite,
                "sum_(n=1..t) atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = sum_(n=1..m) atan(L(m)/L(2n+m)) - sum_(n=1..m) atan(L(m)/L(2n+2t+m))",
            ),
            IdentityId::Theorem1(Part::D) => (
                Arity::MAndT,
                ParityConstraint::MEven,
                Kind::Finite,
                "sum_(n=1..t) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_(n=1..m) atan(F(m)/F(2n+m)) - sum_(n=1..m) atan(F(m)/F(2n+2t+m))",
            ),
            IdentityId::Theorem2(Part::A) => (
                Arity::MAndT,
                ParityConstraint::None,
                Kind::Finite,
                "sum_(n=1..t) (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) (-1)^(n-1) atan(L(m)/L(2n+m-1)) + (-1)^(t-1) sum_(n=1..m) (-1)^(n-1) atan(L(m)/L(2n+2t+m-1))",
            ),
            IdentityId::Theorem2(_) => (
                Arity::MAndT,
                ParityConstraint::None,
                Kind::Finite,
                "sum_(n=1..t) (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_(n=1..m) (-1)^(n-1) atan(F(m)/F(2n+m)) + (-1)^(t-1) sum_(n=1..m) (-1)^(n-1) atan(F(m)/F(2n+2t+m))",
            ),
            IdentityId::Theorem3(Part::A) => (
                Arity::MAndT,
                ParityConstraint::MOdd,
                Kind::Finite,
                "2 sum_(n=1..t) atan(L(m)/L(2n+m-1)) = sum_(n=1..m) atan(2/L(2n-1)) - sum_(n=1..m) atan(F(m)/F(2n+2t+m-1)) - sum_(n=t+1..t+m) atan(L(m)/L(2n+m-1))",
            ),
            IdentityId::Theorem3(Part::B) => (
                Arity::MAndT,
                ParityConstraint::MEven,
                Kind::Finite,
                "2 sum_(n=1..t) atan(F(m)/F(2n+m-1)) = sum_(n=1..m) atan(2/L(2n-1)) - sum_(n=1..m) atan(L(m)/L(2n+2t+m-1)) - sum_(n=t+1..t+m) atan(F(m)/F(2n+m-1))",
            ),
            IdentityId::Theorem3(_) => (
                Arity::MAndT,
                ParityConstraint::None,
                Kind::Finite,
                "2 sum_(n=1..t) (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_(n=1..m) (-1)^(n-1) atan(2/L(2n-1)) + (-1)^(t-1) sum_(n=1..m) (-1)^(n-1) atan(L(m)/L(2n+2t+m-1)) - sum_(n=t+1..t+m) (-1)^(n-1) atan(F(m)/F(2n+m-1))",
            ),
            IdentityId::IE4 => (
                Arity::Parameterless,
                ParityConstraint::None,
                Kind::Infinite,
                "sum_(n>=1) (-1)^(n-1) atan(1/F(2n)) = atan(1/phi)",
            ),
            IdentityId::IE6 => (
                Arity::Parameterless,
                ParityConstraint::None,
                Kind::Infinite,
                "2 sum_(n>=1) atan(1/L(2n)) = atan(2)",
            ),
            IdentityId::IE7 => (
                Arity::Parameterless,
                ParityConstraint::None,
                Kind::Infinite,
                "sum_(n>=1) atan(1/F(2n+1)) = pi/4",
            ),
            IdentityId::Corollary1(Part::A) => (
                Arity::MOnly,
                ParityConstraint::MEven,
                Kind::Infinite,
                "sum_(n>=1) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) atan(L(m)/L(2n+m-1))",
            ),
            IdentityId::Corollary1(Part::B) => (
                Arity::MOnly,
                ParityConstraint::MOdd,
                Kind::Infinite,
                "sum_(n>=1) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) atan(F(m)/F(2n+m-1))",
            ),
            IdentityId::Corollary1(Part::C) => (
                Arity::MOnly,
                ParityConstraint::MOdd,
                Kind::Infinite,
                "sum_(n>=1) atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = sum_(n=1..m) atan(L(m)/L(2n+m))",
            ),
            IdentityId::Corollary1(Part::D) => (
                Arity::MOnly,
                ParityConstraint::MEven,
                Kind::Infinite,
                "sum_(n>=1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_(n=1..m) atan(F(m)/F(2n+m))",
            ),
            IdentityId::Corollary2(Part::A) => (
                Arity::MOnly,
                ParityConstraint::None,
                Kind::Infinite,
                "sum_(n>=1) (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_(n=1..m) (-1)^(n-1) atan(L(m)/L(2n+m-1))",
            ),
            IdentityId::Corollary2(_) => (
                Arity::MOnly,
                ParityConstraint::None,
                Kind::Infinite,
                "sum_(n>=1) (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_(n=1..m) (-1)^(n-1) atan(F(m)/F(2n+m))",
            ),
            IdentityId::Corollary3(Part::A) => (
                Arity::MOnly,
                ParityConstraint::MOdd,
                Kind::Infinite,
                "2 sum_(n>=1) atan(L(m)/L(2n+m-1)) = sum_(n=1..m) atan(2/L(2n-1))",
            ),
            IdentityId::Corollary3(Part::B) => (
                Arity::MOnly,
                ParityConstraint::MEven,
                Kind::Infinite,
                "2 sum_(n>=1) atan(F(m)/F(2n+m-1)) = sum_(n=1..m) atan(2/L(2n-1))",
            ),
            IdentityId::Corollary3(_) => (
                Arity::MOnly,
                ParityConstraint::None,
                Kind::Infinite,
                "2 sum_(n>=1) (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_(n=1..m) (-1)^(n-1) atan(2/L(2n-1))",
            ),
        };
        Ok(IdentityInfo {
            id: self,
            arity,
            parity,
            kind,
            description,
        })
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Complete stable-ordered catalog listing.
pub fn list_identities() -> Vec<IdentityInfo> {
    IdentityId::all()
        .into_iter()
        .map(|id| id.info().expect("catalog ids are valid"))
        .collect()
}

/// One fully instantiated finite identity: both sides as angle sums.
#[derive(Debug, Clone)]
pub struct IdentityInstance {
    pub id: IdentityId,
    pub m: Option<i64>,
    pub t: Option<i64>,
    pub lhs: AngleSum,
    pub rhs: AngleSum,
}

impl IdentityInstance {
    /// Falsification-testing hook: replaces the argument `p/q` of the
    /// `index`-th lhs term by `(p+1)/q`. Never used by verification
    /// paths; exists so tests can demonstrate that broken instances are
    /// reported as falsified.
    pub fn perturb_lhs_arg(&mut self, index: usize) {
        let terms: Vec<ArctanTerm> = self
            .lhs
            .terms()
            .iter()
            .enumerate()
            .map(|(i, term)| {
                if i == index {
                    let arg = term.arg();
                    let bumped = make_rational(arg.numer() + 1, arg.denom().clone())
                        .expect("denominator unchanged");
                    ArctanTerm::new(term.coeff(), bumped)
                } else {
                    term.clone()
                }
            })
            .collect();
        self.lhs = AngleSum::new(terms);
    }
}

fn alt(n: i64) -> i64 {
    // (-1)^(n-1)
    if n.rem_euclid(2) == 1 {
        1
    } else {
        -1
    }
}

fn term(coeff: i64, num: BigInt, den: BigInt) -> Result<ArctanTerm> {
    Ok(ArctanTerm::new(coeff, make_rational(num, den)?))
}

fn parity_check(id: IdentityId, parity: ParityConstraint, m: i64) -> Result<()> {
    if parity.admits(m, 0) {
        Ok(())
    } else {
        Err(Error::ParityViolation {
            context: id.name(),
            required: parity.label(),
            got: m,
        })
    }
}

/// Square of a big integer.
fn sq(x: &BigInt) -> BigInt {
    x * x
}

/// Instantiates a finite catalog identity.
///
/// `t` carries the truncation index for summed identities and the single
/// index `n >= 1` for the per-index (`m`,`n`) entries. For t-only
/// entries `m` must be 0.
pub fn build_finite(id: IdentityId, m: i64, t: i64) -> Result<IdentityInstance> {
    let info = id.info()?;
    if info.kind != Kind::Finite {
        return Err(Error::InvalidParameter(format!(
            "{} is an infinite identity; use the certified series evaluator",
            id.name()
        )));
    }
    if m < 0 || t < 0 {
        return Err(Error::InvalidParameter(format!(
            "{} requires non-negative parameters (got m={m}, t={t})",
            id.name()
        )));
    }
    match info.arity {
        Arity::TOnly => {
            if m != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{} takes only t (got m={m})",
                    id.name()
                )));
            }
        }
        Arity::MAndT => parity_check(id, info.parity, m)?,
        Arity::MAndN => {
            parity_check(id, info.parity, m)?;
            if t < 1 {
                return Err(Error::InvalidParameter(format!(
                    "{} requires index n >= 1 (got n={t})",
                    id.name()
                )));
            }
        }
        Arity::Parameterless | Arity::MOnly => unreachable!("infinite arities rejected above"),
    }

    let f = fib_cached;
    let l = lucas_cached;
    let mut lhs = AngleSum::empty();
    let mut rhs = AngleSum::empty();

    match id {
        IdentityId::Hr63T5 => {
            for n in 1..=t {
                lhs.push(term(alt(n), BigInt::from(1), f(2 * n))?);
            }
            rhs.push(term(1, f(t), f(t + 1))?);
        }
        IdentityId::Hr64 => {
            for n in 1..=t {
                lhs.push(term(2, BigInt::from(1), l(2 * n))?);
            }
            for n in 1..=t {
                rhs.push(term(1, BigInt::from(1), f(2 * n + 1))?);
            }
            rhs.push(term(-1, BigInt::from(1), l(2 * t + 2))?);
            rhs.push(term(1, BigInt::from(1), BigInt::from(3))?);
        }
        IdentityId::Lemma1(which) => {
            let n = t;
            let (sign, lhs_t, rhs_head, rhs_tail) = match which {
                1 => (
                    -1,
                    term(1, f(2 * m), f(2 * n + 2 * m - 1))?,
                    term(1, l(m), l(2 * n + m - 1))?,
                    (l(m), l(2 * n + 3 * m - 1)),
                ),
                2 => (
                    1,
                    term(1, f(2 * m), f(2 * n + 2 * m - 1))?,
                    term(1, l(m), l(2 * n + m - 1))?,
                    (l(m), l(2 * n + 3 * m - 1)),
                ),
                3 => (
                    -1,
                    term(1, f(2 * m), f(2 * n + 2 * m - 1))?,
                    term(1, f(m), f(2 * n + m - 1))?,
                    (f(m), f(2 * n + 3 * m - 1)),
                ),
                4 => (
                    1,
                    term(1, f(2 * m), f(2 * n + 2 * m - 1))?,
                    term(1, f(m), f(2 * n + m - 1))?,
                    (f(m), f(2 * n + 3 * m - 1)),
                ),
                5 | 6 => (
                    if which == 5 { -1 } else { 1 },
                    term(
                        1,
                        sq(&l(m)) * l(2 * n + 2 * m),
                        BigInt::from(5) * sq(&f(2 * n + 2 * m)),
                    )?,
                    term(1, l(m), l(2 * n + m))?,
                    (l(m), l(2 * n + 3 * m)),
                ),
                _ => (
                    if which == 7 { -1 } else { 1 },
                    term(1, sq(&f(m)) * l(2 * n + 2 * m), sq(&f(2 * n + 2 * m)))?,
                    term(1, f(m), f(2 * n + m))?,
                    (f(m), f(2 * n + 3 * m)),
                ),
            };
            lhs.push(lhs_t);
            rhs.push(rhs_head);
            rhs.push(term(sign, rhs_tail.0, rhs_tail.1)?);
        }
        IdentityId::E33 => {
            let n = t;
            lhs.push(term(1, BigInt::from(2), l(2 * n - 1))?);
            rhs.push(term(1, l(m), l(2 * n + m - 1))?);
            rhs.push(term(1, f(m), f(2 * n + m - 1))?);
        }
        IdentityId::Theorem1(part) => {
            for n in 1..=t {
                let arg = match part {
                    Part::A | Part::B => term(1, f(2 * m), f(2 * n + 2 * m - 1))?,
                    Part::C => term(
                        1,
                        sq(&l(m)) * l(2 * n + 2 * m),
                        BigInt::from(5) * sq(&f(2 * n + 2 * m)),
                    )?,
                    Part::D => term(1, sq(&f(m)) * l(2 * n + 2 * m), sq(&f(2 * n + 2 * m)))?,
                };
                lhs.push(arg);
            }
            for n in 1..=m {
                let (head, tail) = match part {
                    Part::A => (
                        term(1, l(m), l(2 * n + m - 1))?,
                        term(-1, l(m), l(2 * n + 2 * t + m - 1))?,
                    ),
                    Part::B => (
                        term(1, f(m), f(2 * n + m - 1))?,
                        term(-1, f(m), f(2 * n + 2 * t + m - 1))?,
                    ),
                    Part::C => (
                        term(1, l(m), l(2 * n + m))?,
                        term(-1, l(m), l(2 * n + 2 * t + m))?,
                    ),
                    Part::D => (
                        term(1, f(m), f(2 * n + m))?,
                        term(-1, f(m), f(2 * n + 2 * t + m))?,
                    ),
                };
                rhs.push(head);
                rhs.push(tail);
            }
        }
        IdentityId::Theorem2(part) => {
            for n in 1..=t {
                let lhs_t = match part {
                    Part::A => term(alt(n), f(2 * m), f(2 * n + 2 * m - 1))?,
                    _ => term(alt(n), sq(&f(m)) * l(2 * n + 2 * m), sq(&f(2 * n + 2 * m)))?,
                };
                lhs.push(lhs_t);
            }
            for n in 1..=m {
                let (head, tail) = match part {
                    Part::A => (
                        term(alt(n), l(m), l(2 * n + m - 1))?,
                        term(alt(t) * alt(n), l(m), l(2 * n + 2 * t + m - 1))?,
                    ),
                    _ => (
                        term(alt(n), f(m), f(2 * n + m))?,
                        term(alt(t) * alt(n), f(m), f(2 * n + 2 * t + m))?,
                    ),
                };
                rhs.push(head);
                rhs.push(tail);
            }
        }
        IdentityId::Theorem3(part) => match part {
            Part::A => {
                for n in 1..=t {
                    lhs.push(term(2, l(m), l(2 * n + m - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(1, BigInt::from(2), l(2 * n - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(-1, f(m), f(2 * n + 2 * t + m - 1))?);
                }
                for n in (t + 1)..=(t + m) {
                    rhs.push(term(-1, l(m), l(2 * n + m - 1))?);
                }
            }
            Part::B => {
                for n in 1..=t {
                    lhs.push(term(2, f(m), f(2 * n + m - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(1, BigInt::from(2), l(2 * n - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(-1, l(m), l(2 * n + 2 * t + m - 1))?);
                }
                for n in (t + 1)..=(t + m) {
                    rhs.push(term(-1, f(m), f(2 * n + m - 1))?);
                }
            }
            _ => {
                for n in 1..=t {
                    lhs.push(term(2 * alt(n), f(m), f(2 * n + m - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(alt(n), BigInt::from(2), l(2 * n - 1))?);
                }
                for n in 1..=m {
                    rhs.push(term(alt(t) * alt(n), l(m), l(2 * n + 2 * t + m - 1))?);
                }
                for n in (t + 1)..=(t + m) {
                    rhs.push(term(-alt(n), f(m), f(2 * n + m - 1))?);
                }
            }
        },
        _ => unreachable!("infinite ids rejected above"),
    }

    Ok(IdentityInstance {
        id,
        m: if info.arity == Arity::TOnly {
            None
        } else {
            Some(m)
        },
        t: Some(t),
        lhs,
        rhs,
    })
}

/// Exact verification report for a finite identity instance.
#[derive(Debug, Clone)]
pub struct Report {
    pub id: IdentityId,
    pub m: Option<i64>,
    pub t: Option<i64>,
    pub status: Status,
    /// Primitive Gaussian product of `lhs - rhs`; `1 + 0i` iff verified
    /// together with a zero π-multiple.
    pub witness: GaussianInt,
    pub pi_multiple: i64,
    pub terms: usize,
    pub elapsed: Duration,
}

/// Verifies an already-built instance exactly.
pub fn verify_instance(instance: &IdentityInstance) -> Result<Report> {
    let start = Instant::now();
    let combined = instance.lhs.concat(&instance.rhs.negated());
    let reduced = angle::reduce(&combined)?;
    let verified = reduced.z.is_one() && reduced.pi_multiple == 0;
    Ok(Report {
        id: instance.id,
        m: instance.m,
        t: instance.t,
        status: if verified {
            Status::Verified
        } else {
            Status::Falsified
        },
        witness: reduced.z,
        pi_multiple: reduced.pi_multiple,
        terms: combined.len(),
        elapsed: start.elapsed(),
    })
}

/// Builds and exactly verifies a finite catalog identity.
pub fn verify_finite(id: IdentityId, m: i64, t: i64) -> Result<Report> {
    let instance = build_finite(id, m, t)?;
    verify_instance(&instance)
}

/// Closed form of an infinite identity's right-hand side.
#[derive(Debug, Clone)]
pub enum ClosedForm {
    /// A finite angle sum over rational arctangents.
    RationalAngles(AngleSum),
    /// `atan(1/φ)`, φ the golden ratio.
    GoldenArctan,
    /// `π/4`.
    PiQuarter,
}

/// Term generator for an infinite catalog identity: yields the `n`-th
/// summand of the series side, alternating signs and doubling factors
/// folded into the coefficient.
#[derive(Debug, Clone)]
pub struct InfiniteSeries {
    id: IdentityId,
    m: i64,
}

impl InfiniteSeries {
    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Whether the series terms alternate in sign.
    pub fn is_alternating(&self) -> bool {
        matches!(
            self.id,
            IdentityId::IE4 | IdentityId::Corollary2(_) | IdentityId::Corollary3(Part::C)
        )
    }

    /// The `n`-th summand, `n >= 1`.
    pub fn term(&self, n: u64) -> ArctanTerm {
        assert!(n >= 1, "series terms are 1-indexed");
        let n = n as i64;
        let m = self.m;
        let f = fib_cached;
        let l = lucas_cached;
        let mk = |c: i64, num: BigInt, den: BigInt| {
            term(c, num, den).expect("series denominators are positive")
        };
        match self.id {
            IdentityId::IE4 => mk(alt(n), BigInt::from(1), f(2 * n)),
            IdentityId::IE6 => mk(2, BigInt::from(1), l(2 * n)),
            IdentityId::IE7 => mk(1, BigInt::from(1), f(2 * n + 1)),
            IdentityId::Corollary1(Part::A) | IdentityId::Corollary1(Part::B) => {
                mk(1, f(2 * m), f(2 * n + 2 * m - 1))
            }
            IdentityId::Corollary1(Part::C) => mk(
                1,
                sq(&l(m)) * l(2 * n + 2 * m),
                BigInt::from(5) * sq(&f(2 * n + 2 * m)),
            ),
            IdentityId::Corollary1(_) => mk(1, sq(&f(m)) * l(2 * n + 2 * m), sq(&f(2 * n + 2 * m))),
            IdentityId::Corollary2(Part::A) => mk(alt(n), f(2 * m), f(2 * n + 2 * m - 1)),
            IdentityId::Corollary2(_) => {
                mk(alt(n), sq(&f(m)) * l(2 * n + 2 * m), sq(&f(2 * n + 2 * m)))
            }
            IdentityId::Corollary3(Part::A) => mk(2, l(m), l(2 * n + m - 1)),
            IdentityId::Corollary3(Part::B) => mk(2, f(m), f(2 * n + m - 1)),
            IdentityId::Corollary3(_) => mk(2 * alt(n), f(m), f(2 * n + m - 1)),
            _ => unreachable!("constructor admits only infinite ids"),
        }
    }
}

/// Validates parameters and returns the term generator for an infinite
/// identity.
pub fn term_generator(id: IdentityId, m: i64) -> Result<InfiniteSeries> {
    let info = id.info()?;
    if info.kind != Kind::Infinite {
        return Err(Error::InvalidParameter(format!(
            "{} is a finite identity; use build_finite/verify_finite",
            id.name()
        )));
    }
    match info.arity {
        Arity::Parameterless => {
            if m != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{} takes no parameters (got m={m})",
                    id.name()
                )));
            }
        }
        Arity::MOnly => {
            if m < 0 {
                return Err(Error::InvalidParameter(format!(
                    "{} requires m >= 0 (got m={m})",
                    id.name()
                )));
            }
            parity_check(id, info.parity, m)?;
        }
        _ => unreachable!("finite arities rejected above"),
    }
    Ok(InfiniteSeries { id, m })
}

/// The right-hand side of an infinite identity.
pub fn closed_form(id: IdentityId, m: i64) -> Result<ClosedForm> {
    // Same admissibility rules as the term generator.
    term_generator(id, m)?;
    let f = fib_cached;
    let l = lucas_cached;
    let mut sum = AngleSum::empty();
    match id {
        IdentityId::IE4 => return Ok(ClosedForm::GoldenArctan),
        IdentityId::IE7 => return Ok(ClosedForm::PiQuarter),
        IdentityId::IE6 => {
            sum.push(term(1, BigInt::from(2), BigInt::from(1))?);
        }
        IdentityId::Corollary1(part) => {
            for n in 1..=m {
                let t = match part {
                    Part::A => term(1, l(m), l(2 * n + m - 1))?,
                    Part::B => term(1, f(m), f(2 * n + m - 1))?,
                    Part::C => term(1, l(m), l(2 * n + m))?,
                    Part::D => term(1, f(m), f(2 * n + m))?,
                };
                sum.push(t);
            }
        }
        IdentityId::Corollary2(part) => {
            for n in 1..=m {
                let t = match part {
                    Part::A => term(alt(n), l(m), l(2 * n + m - 1))?,
                    _ => term(alt(n), f(m), f(2 * n + m))?,
                };
                sum.push(t);
            }
        }
        IdentityId::Corollary3(part) => {
            for n in 1..=m {
                let t = match part {
                    Part::A | Part::B => term(1, BigInt::from(2), l(2 * n - 1))?,
                    _ => term(alt(n), BigInt::from(2), l(2 * n - 1))?,
                };
                sum.push(t);
            }
        }
        _ => unreachable!("finite ids rejected above"),
    }
    Ok(ClosedForm::RationalAngles(sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, Rational};

    #[test]
    fn listing_is_stable_and_complete() {
        let infos = list_identities();
        assert_eq!(infos.len(), 32);
        let names: Vec<String> = infos.iter().map(|i| i.id.name()).collect();
        assert_eq!(names[0], "HR63-T5");
        assert_eq!(names[2], "L1-1");
        assert_eq!(names[10], "E33");
        assert_eq!(names[19], "T3-c");
        assert_eq!(names[20], "I-E4");
        assert_eq!(names[31], "C3-c");
        // Duplicate-label pair is split by parity.
        let l15 = IdentityId::Lemma1(5).info().unwrap();
        let l16 = IdentityId::Lemma1(6).info().unwrap();
        assert_eq!(l15.parity, ParityConstraint::MOdd);
        assert_eq!(l16.parity, ParityConstraint::MEven);
        // Every infinite entry has a closed form attached.
        for info in infos.iter().filter(|i| i.kind == Kind::Infinite) {
            let m = match info.parity {
                ParityConstraint::MOdd => 1,
                _ => {
                    if info.arity == Arity::Parameterless {
                        0
                    } else {
                        2
                    }
                }
            };
            assert!(closed_form(info.id, m).is_ok(), "{}", info.id.name());
        }
    }

    #[test]
    fn parse_round_trips() {
        for id in IdentityId::all() {
            assert_eq!(IdentityId::parse(&id.name()).unwrap(), id);
            assert_eq!(
                IdentityId::parse(&id.name().to_ascii_lowercase()).unwrap(),
                id
            );
        }
        assert!(IdentityId::parse("T9-z").is_err());
    }

    #[test]
    fn build_hr63_t5_structure() {
        let inst = build_finite(IdentityId::Hr63T5, 0, 3).unwrap();
        let args: Vec<Rational> = inst.lhs.terms().iter().map(|t| t.arg().clone()).collect();
        let coeffs: Vec<i64> = inst.lhs.terms().iter().map(|t| t.coeff()).collect();
        assert_eq!(args, vec![ratio(1, 1), ratio(1, 3), ratio(1, 8)]);
        assert_eq!(coeffs, vec![1, -1, 1]);
        assert_eq!(inst.rhs.terms().len(), 1);
        assert_eq!(inst.rhs.terms()[0].arg(), &ratio(2, 3));
    }

    #[test]
    fn build_lemma1_7_structure() {
        let inst = build_finite(IdentityId::Lemma1(7), 2, 1).unwrap();
        assert_eq!(inst.lhs.terms().len(), 1);
        assert_eq!(inst.lhs.terms()[0].arg(), &ratio(9, 32));
        let rhs: Vec<(i64, Rational)> = inst
            .rhs
            .terms()
            .iter()
            .map(|t| (t.coeff(), t.arg().clone()))
            .collect();
        assert_eq!(rhs, vec![(1, ratio(1, 3)), (-1, ratio(1, 21))]);
    }

    #[test]
    fn build_t3c_structure() {
        let inst = build_finite(IdentityId::Theorem3(Part::C), 1, 1).unwrap();
        assert_eq!(inst.lhs.terms().len(), 1);
        assert_eq!(inst.lhs.terms()[0].coeff(), 2);
        assert_eq!(inst.lhs.terms()[0].arg(), &ratio(1, 1));
        let rhs: Vec<(i64, Rational)> = inst
            .rhs
            .terms()
            .iter()
            .map(|t| (t.coeff(), t.arg().clone()))
            .collect();
        assert_eq!(
            rhs,
            vec![(1, ratio(2, 1)), (1, ratio(1, 7)), (1, ratio(1, 3))]
        );
    }

    #[test]
    fn verify_examples() {
        let r = verify_finite(IdentityId::Theorem1(Part::B), 1, 4).unwrap();
        assert_eq!(r.status, Status::Verified);

        // m = 0: empty rhs, zero-argument lhs terms, trivially verified.
        let inst = build_finite(IdentityId::Theorem2(Part::A), 0, 7).unwrap();
        assert!(inst.rhs.is_empty());
        assert!(inst.lhs.terms().iter().all(|t| t.arg() == &ratio(0, 1)));
        let r = verify_finite(IdentityId::Theorem2(Part::A), 0, 7).unwrap();
        assert_eq!(r.status, Status::Verified);

        let mut inst = build_finite(IdentityId::Hr63T5, 0, 4).unwrap();
        inst.perturb_lhs_arg(3); // 1/F_8 = 1/21 -> 2/21
        let r = verify_instance(&inst).unwrap();
        assert_eq!(r.status, Status::Falsified);
    }

    #[test]
    fn parity_and_arity_rejections() {
        assert!(matches!(
            build_finite(IdentityId::Theorem1(Part::A), 1, 3),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            build_finite(IdentityId::Lemma1(1), 2, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            build_finite(IdentityId::Hr63T5, 3, 1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            build_finite(IdentityId::IE6, 0, 4),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            term_generator(IdentityId::Corollary3(Part::A), 2),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            term_generator(IdentityId::Hr64, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn term_generator_examples() {
        let s = term_generator(IdentityId::IE4, 0).unwrap();
        let t2 = s.term(2);
        assert_eq!(t2.coeff(), -1);
        assert_eq!(t2.arg(), &ratio(1, 3));

        let s = term_generator(IdentityId::Corollary3(Part::A), 1).unwrap();
        let t3 = s.term(3);
        assert_eq!(t3.coeff(), 2);
        assert_eq!(t3.arg(), &ratio(1, 18));

        let s = term_generator(IdentityId::Corollary3(Part::B), 0).unwrap();
        for n in 1..=4 {
            let t = s.term(n);
            assert_eq!(t.coeff(), 2);
            assert_eq!(t.arg(), &ratio(0, 1));
        }
    }

    #[test]
    fn closed_form_examples() {
        match closed_form(IdentityId::IE6, 0).unwrap() {
            ClosedForm::RationalAngles(s) => {
                assert_eq!(s.terms().len(), 1);
                assert_eq!(s.terms()[0].arg(), &ratio(2, 1));
            }
            other => panic!("unexpected closed form {other:?}"),
        }
        match closed_form(IdentityId::Corollary3(Part::C), 1).unwrap() {
            ClosedForm::RationalAngles(s) => {
                assert_eq!(s.terms().len(), 1);
                assert_eq!(s.terms()[0].arg(), &ratio(2, 1));
            }
            other => panic!("unexpected closed form {other:?}"),
        }
        assert!(matches!(
            closed_form(IdentityId::IE4, 0).unwrap(),
            ClosedForm::GoldenArctan
        ));
        assert!(matches!(
            closed_form(IdentityId::IE7, 0).unwrap(),
            ClosedForm::PiQuarter
        ));
    }

    #[test]
    fn small_grids_verify() {
        for id in IdentityId::all() {
            let info = id.info().unwrap();
            if info.kind != Kind::Finite {
                continue;
            }
            match info.arity {
                Arity::TOnly => {
                    for t in 0..=8 {
                        let r = verify_finite(id, 0, t).unwrap();
                        assert_eq!(r.status, Status::Verified, "{} t={t}", id.name());
                    }
                }
                Arity::MAndT => {
                    for m in 0..=4 {
                        if !info.parity.admits(m, 0) {
                            continue;
                        }
                        for t in 0..=6 {
                            let r = verify_finite(id, m, t).unwrap();
                            assert_eq!(r.status, Status::Verified, "{} m={m} t={t}", id.name());
                        }
                    }
                }
                Arity::MAndN => {
                    for m in 0..=4 {
                        if !info.parity.admits(m, 0) {
                            continue;
                        }
                        for n in 1..=6 {
                            let r = verify_finite(id, m, n).unwrap();
                            assert_eq!(r.status, Status::Verified, "{} m={m} n={n}", id.name());
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn t3c_holds_for_both_parities() {
        for m in 0..=5 {
            for t in 0..=6 {
                let r = verify_finite(IdentityId::Theorem3(Part::C), m, t).unwrap();
                assert_eq!(r.status, Status::Verified, "m={m} t={t}");
            }
        }
    }
}
