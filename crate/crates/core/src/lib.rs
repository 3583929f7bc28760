//! Exact verification engine and certified numerical evaluator for
//! inverse-tangent summation identities over Fibonacci and Lucas numbers.
//!
//! The crate decides identities between formal integer combinations of
//! arctangents of rationals *exactly*: each side maps to a Gaussian-integer
//! product whose argument is the angle modulo π, and the missing π-multiple
//! is pinned down with certified ball arithmetic at escalating precision.
//! Infinite series are handled by partial sums with rigorous geometric
//! tail bounds against certified closed-form constants.
//!
//! Module map:
//!
//! - [`fib`]: arbitrary-precision `F_n`/`L_n` for any integer index and
//!   the fourteen algebraic identity families relating them;
//! - [`rational`] / [`gaussian`]: exact rationals and Gaussian integers;
//! - [`ball`]: midpoint-radius dyadic ball arithmetic with arctan, π and
//!   √5 kernels;
//! - [`angle`]: angle sums, their Gaussian products, and the exact
//!   zero-angle decision procedure;
//! - [`telescope`]: generic finite telescoping and doubling identities
//!   over rational sequences;
//! - [`catalog`]: the named identity catalog with builders and exact
//!   verification;
//! - [`series`]: certified evaluation of the infinite catalog entries.

pub mod angle;
pub mod ball;
pub mod catalog;
pub mod error;
pub mod fib;
pub mod gaussian;
pub mod rational;
pub mod series;
pub mod telescope;

pub use angle::{AngleSum, ArctanTerm, ReducedAngle};
pub use ball::CertifiedReal;
pub use catalog::{IdentityId, IdentityInfo, IdentityInstance, Report, Status};
pub use error::{Error, ParityConstraint, Result};
pub use gaussian::GaussianInt;
pub use rational::Rational;
pub use series::VerificationReport;

/// Arbitrary-precision signed integer used throughout.
pub use num_bigint::BigInt;
