//! Exact arithmetic for generalized D'Arcais polynomials.
//!
//! A normalized arithmetic function `g` (with `g(1) = 1`) determines the
//! polynomial sequence
//!
//! ```text
//! P_0(x) = 1,    P_n(x) = (x / n) * sum_{k=1..n} g(k) P_{n-k}(x)
//! ```
//!
//! and the difference polynomials `Delta_n(x) = P_n(x)^(n+1) - P_{n+1}(x)^n`.
//! Positivity of `Delta_n` at `x` is the statement that the `n`-th root of
//! `P_n(x)` exceeds the `(n+1)`-th root of `P_{n+1}(x)`; the crate builds these
//! objects with exact rational arithmetic, certifies where their largest real
//! zero lies, and checks the matching inequalities on the integer counting
//! sequences (partitions, colored partitions, plane partitions,
//! overpartitions, commuting tuples).
//!
//! Module map:
//! - [`rational`], [`poly`], [`intpoly`]: exact scalars and dense polynomials.
//! - [`arith`]: the arithmetic functions `sigma_l`, `psi_l`, `gbar`, `g_l`.
//! - [`darcais`]: the polynomial recursion and the hook-length oracle.
//! - [`delta`], [`roots`]: difference polynomials, root isolation, ray certificates.
//! - [`closed_forms`]: Pochhammer, Laguerre and the `Pi_n` factor.
//! - [`sequences`]: integer sequences, root/quotient comparisons, log-concavity.

pub mod arith;
pub mod closed_forms;
pub mod darcais;
pub mod delta;
mod error;
pub mod intpoly;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod sequences;

pub use arith::{ArithFn, ArithFnSpec};
pub use darcais::PolySequence;
pub use delta::{DeltaPolynomial, RayClaim, RayPositivityCertificate};
pub use error::{Error, Result};
pub use intpoly::IntPoly;
pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::IsolatingInterval;
pub use sequences::IntegerSequence;
