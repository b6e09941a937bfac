//! Difference polynomials `Delta_n(x) = P_n(x)^(n+1) - P_{n+1}(x)^n`.
//!
//! With `A_m = m! P_m = x R_m` the difference has the integer form
//!
//! ```text
//! Delta_n = x^n C_n / ((n!)^(n+1) (n+1)^n),
//! C_n = (n+1)^n x R_n^(n+1) - n! R_{n+1}^n,
//! ```
//!
//! so for `x > 0` the sign of `Delta_n` is the sign of the integer polynomial
//! `C_n`. Root isolation and ray certificates run on `C_n`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::ArithFnSpec;
use crate::darcais::PolySequence;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::roots::{self, IsolatingInterval};

/// Default isolation width for largest-zero queries.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1_000_000))
}

#[derive(Clone, Debug)]
pub struct DeltaPolynomial {
    pub n: usize,
    pub label: String,
    core: IntPoly,
    denominator: BigInt,
}

fn require_indices(seq: &PolySequence, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("Delta_n is defined for n >= 1".into()));
    }
    if seq.n_max() < n + 1 {
        return Err(Error::MissingIndex(n + 1));
    }
    Ok(())
}

/// Builds `Delta_n` for a sequence that contains `P_n` and `P_{n+1}`.
pub fn build_delta(seq: &PolySequence, n: usize) -> Result<DeltaPolynomial> {
    require_indices(seq, n)?;
    let (_, r_n) = seq.scaled(n)?.strip_x_power();
    let (_, r_next) = seq.scaled(n + 1)?.strip_x_power();
    let n_fact = seq.factorial(n)?;
    let np1_pow_n = num_traits::pow(BigInt::from(n + 1), n);
    let first = r_n.pow(n as u32 + 1).scale(&np1_pow_n).shift_degree(1);
    let second = r_next.pow(n as u32).scale(n_fact);
    let core = &first - &second;
    if core.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let denominator = num_traits::pow(n_fact.clone(), n + 1) * np1_pow_n;
    Ok(DeltaPolynomial {
        n,
        label: seq.label().to_string(),
        core,
        denominator,
    })
}

impl DeltaPolynomial {
    /// `C_n`, the integer polynomial with `Delta_n = x^n C_n / denominator`.
    pub fn core(&self) -> &IntPoly {
        &self.core
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// `n (n + 1)`.
    pub fn degree(&self) -> usize {
        self.n + self.core.degree().expect("non-zero core")
    }

    /// The fully expanded rational polynomial.
    pub fn poly(&self) -> Polynomial {
        Polynomial::from_int_poly(
            &self.core.shift_degree(self.n),
            &Rational::new(BigInt::one(), self.denominator.clone()),
        )
    }

    pub fn leading_coefficient(&self) -> Rational {
        Rational::new(self.core.leading().expect("non-zero core").clone(), self.denominator.clone())
    }

    /// Sign of `Delta_n(x)` read off the integer form.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let full = self.core.shift_degree(self.n);
        full.sign_at(x.numer(), x.denom())
    }
}

/// `(1/n!)^(n+1) - (1/(n+1)!)^n`.
pub fn expected_leading_coefficient(n: usize) -> Rational {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    let f1 = &f * BigInt::from(n + 1);
    Rational::new(BigInt::one(), num_traits::pow(f, n + 1))
        - Rational::new(BigInt::one(), num_traits::pow(f1, n))
}

/// Sign of `Delta_n(x)` without expanding: evaluates `P_n(x)` and
/// `P_{n+1}(x)` exactly and compares the powers.
pub fn delta_sign_at(seq: &PolySequence, n: usize, x: &Rational) -> Result<i8> {
    require_indices(seq, n)?;
    let a = seq.value_at(n, x)?;
    let b = seq.value_at(n + 1, x)?;
    let lhs = rational::pow(&a, n as u32 + 1);
    let rhs = rational::pow(&b, n as u32);
    Ok(match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Equal => 0,
        Ordering::Less => -1,
    })
}

/// The largest real zero of `Delta_n`, isolated to at most `width` (or exact).
///
/// `Delta_n(0) = 0`, so the answer is exactly zero when no positive root
/// exists.
pub fn largest_real_zero(seq: &PolySequence, n: usize, width: &Rational) -> Result<IsolatingInterval> {
    let delta = build_delta(seq, n)?;
    largest_zero_of(&delta, width)
}

pub fn largest_zero_of(delta: &DeltaPolynomial, width: &Rational) -> Result<IsolatingInterval> {
    if !width.is_positive() {
        return Err(Error::InvalidArgument("isolation width must be positive".into()));
    }
    let (_, core) = delta.core.strip_x_power();
    let report = roots::largest_positive_root(&core)?;
    Ok(match report.largest {
        Some(iv) => roots::refine(&core, &iv, width),
        None => IsolatingInterval::exact(Rational::zero()),
    })
}

/// Largest zeros for every `n` in `range`, in order. Each entry is computed
/// independently (in parallel with the `parallel` feature).
pub fn largest_zero_scan(
    seq: &PolySequence,
    range: std::ops::RangeInclusive<usize>,
    width: &Rational,
) -> Vec<(usize, Result<IsolatingInterval>)> {
    let ns: Vec<usize> = range.collect();
    let f = |&n: &usize| (n, largest_real_zero(seq, n, width));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ns.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ns.iter().map(f).collect()
    }
}

/// A claim `Delta_n(x) > 0` for all `x > threshold`, optionally also at the
/// threshold itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayClaim {
    pub threshold: Rational,
    pub inclusive: bool,
}

impl RayClaim {
    pub fn beyond(threshold: Rational) -> Self {
        Self { threshold, inclusive: false }
    }

    pub fn from(threshold: Rational) -> Self {
        Self { threshold, inclusive: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RayMethod {
    /// `Delta_n(x + a)` (up to a positive factor) has no negative coefficient.
    ShiftedNonnegativeCoefficients,
    /// Descartes bisection found no root above `a`.
    ZeroRootCount,
}

impl RayMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            RayMethod::ShiftedNonnegativeCoefficients => "shifted-nonnegative-coefficients",
            RayMethod::ZeroRootCount => "zero-root-count",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayOutcome {
    Certified,
    /// A root of `Delta_n` strictly above the threshold.
    Refuted { witness: IsolatingInterval },
}

/// Evidence for or against `Delta_n(x) > 0` on `(a, inf)`.
#[derive(Clone, Debug)]
pub struct RayPositivityCertificate {
    pub n: usize,
    pub threshold: Rational,
    pub method: RayMethod,
    pub outcome: RayOutcome,
    /// Sign of `Delta_n(a)`.
    pub sign_at_threshold: i8,
    /// Coefficients of `q^d C(x + a)`-type shifted polynomial with the zero
    /// roots removed; for the coefficient method every entry is `>= 0`.
    pub shifted: IntPoly,
    pub sign_variations: usize,
    pub nodes_examined: usize,
}

impl RayPositivityCertificate {
    /// `Delta_n(x) > 0` for every `x > a`.
    pub fn is_certified(&self) -> bool {
        self.outcome == RayOutcome::Certified
    }

    pub fn holds(&self, claim_inclusive: bool) -> bool {
        self.is_certified() && (!claim_inclusive || self.sign_at_threshold > 0)
    }

    /// Re-checks the stored witness data. For the coefficient method this
    /// is a complete proof on its own: a polynomial with non-negative
    /// coefficients and a positive leading term is positive on `(0, inf)`.
    pub fn check_witness(&self) -> bool {
        match (&self.outcome, self.method) {
            (RayOutcome::Certified, RayMethod::ShiftedNonnegativeCoefficients) => {
                self.shifted.leading().is_some_and(|c| c.is_positive())
                    && self.shifted.coeffs().iter().all(|c| !c.is_negative())
            }
            (RayOutcome::Certified, RayMethod::ZeroRootCount) => {
                roots::largest_positive_root(&self.shifted).is_ok_and(|r| r.largest.is_none())
            }
            (RayOutcome::Refuted { witness }, _) => match &witness.exact {
                Some(r) => r > &self.threshold,
                None => witness.lo >= self.threshold && witness.sign_lo != witness.sign_hi,
            },
        }
    }
}

/// Proves `Delta_n(x) > 0` for every `x > a`, or returns a root above `a`.
pub fn verify_positive_beyond(seq: &PolySequence, n: usize, a: &Rational) -> Result<RayPositivityCertificate> {
    let delta = build_delta(seq, n)?;
    let sign_at_threshold = delta_sign_at(seq, n, a)?;
    verify_delta_beyond(&delta, a, sign_at_threshold)
}

fn verify_delta_beyond(delta: &DeltaPolynomial, a: &Rational, sign_at_threshold: i8) -> Result<RayPositivityCertificate> {
    // For a >= 0 the factor x^n is positive on (a, inf) and can be dropped.
    let poly = if a.is_negative() {
        delta.core.shift_degree(delta.n)
    } else {
        delta.core.clone()
    };
    let shifted = roots::shift_to_threshold(&poly, a);
    let (_, shifted) = shifted.strip_x_power();
    let variations = shifted.sign_variations(usize::MAX);
    let mut cert = RayPositivityCertificate {
        n: delta.n,
        threshold: a.clone(),
        method: RayMethod::ShiftedNonnegativeCoefficients,
        outcome: RayOutcome::Certified,
        sign_at_threshold,
        shifted,
        sign_variations: variations,
        nodes_examined: 0,
    };
    if variations == 0 {
        return Ok(cert);
    }
    let report = roots::largest_positive_root(&cert.shifted)?;
    cert.method = RayMethod::ZeroRootCount;
    cert.nodes_examined = report.nodes_examined;
    if let Some(iv) = report.largest {
        cert.outcome = RayOutcome::Refuted {
            witness: roots::unshift_interval(&iv, a),
        };
    }
    Ok(cert)
}

/// Checks `claim` for `Delta_n`.
pub fn verify_ray(seq: &PolySequence, n: usize, claim: &RayClaim) -> Result<(bool, RayPositivityCertificate)> {
    let cert = verify_positive_beyond(seq, n, &claim.threshold)?;
    Ok((cert.holds(claim.inclusive), cert))
}

fn g2_g3(g: &ArithFnSpec) -> (Rational, Rational) {
    let t = g.table(3);
    (rational::from_bigint(t[2].clone()), rational::from_bigint(t[3].clone()))
}

/// `Delta_1 = (x/2)(x - g(2))`.
pub fn closed_delta1(g: &ArithFnSpec) -> Polynomial {
    closed_delta1_from(&g2_g3(g).0)
}

pub fn closed_delta1_from(g2: &Rational) -> Polynomial {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Polynomial::new(vec![Rational::zero(), -(g2 * &half), half])
}

/// The quartic `Q` with `Delta_2 = (x^2 / 72) Q(x)`.
pub fn delta2_quartic(g2: &Rational, g3: &Rational) -> Polynomial {
    let r = |v: i64| Rational::from_integer(BigInt::from(v));
    Polynomial::new(vec![
        -(r(8) * g3 * g3),
        r(9) * g2 * g2 * g2 - r(24) * g3 * g2,
        r(9) * g2 * g2 - r(8) * g3,
        r(15) * g2,
        r(7),
    ])
}

/// `Delta_2 = (x^2/72)(7x^4 + 15 g2 x^3 + (9 g2^2 - 8 g3) x^2
/// + (9 g2^3 - 24 g3 g2) x - 8 g3^2)`.
pub fn closed_delta2(g: &ArithFnSpec) -> Polynomial {
    let (g2, g3) = g2_g3(g);
    closed_delta2_from(&g2, &g3)
}

pub fn closed_delta2_from(g2: &Rational, g3: &Rational) -> Polynomial {
    delta2_quartic(g2, g3)
        .shift_degree(2)
        .scale(&Rational::new(BigInt::one(), BigInt::from(72)))
}

/// `g(3) <= g(2)^2`, the condition for `Delta_2 >= 0` on `[g(2), inf)`.
pub fn delta2_criterion(g: &ArithFnSpec) -> bool {
    let (g2, g3) = g2_g3(g);
    delta2_criterion_from(&g2, &g3)
}

pub fn delta2_criterion_from(g2: &Rational, g3: &Rational) -> bool {
    g3 <= &(g2 * g2)
}

/// Ray check of `Delta_2` on `(g(2), inf)` for a sequence built from `g`;
/// the certificate holds exactly when [`delta2_criterion`] does.
pub fn delta2_ray_certificate(seq: &PolySequence) -> Result<RayPositivityCertificate> {
    let g2 = rational::from_bigint(seq.g(2)?.clone());
    verify_positive_beyond(seq, 2, &g2)
}
