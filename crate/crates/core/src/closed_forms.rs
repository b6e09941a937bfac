//! Closed forms for `g = psi_0` (Pochhammer) and `g = psi_1` (associated
//! Laguerre), and the factor `Pi_n` that carries the positive zeros of
//! `Delta_n^{psi_0}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{ArithFn, ArithFnSpec};
use crate::darcais::{generate, PolySequence};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Binomial coefficient by the multiplicative formula; zero when `k > m`.
pub fn binomial(m: u64, k: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `x (x + 1) ... (x + n - 1) / n!`.
pub fn pochhammer_poly(n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for k in 0..n {
        acc = &acc * &Polynomial::from_ints(&[k as i64, 1]);
    }
    acc.scale(&Rational::new(BigInt::one(), factorial(n as u64)))
}

/// `L_n^(alpha)(x) = sum_{k=0..n} C(n + alpha, n - k) (-x)^k / k!`.
pub fn laguerre_poly(n: usize, alpha: i64) -> Result<Polynomial> {
    let top = n as i64 + alpha;
    if top < 0 {
        return Err(Error::InvalidArgument(format!("Laguerre polynomial needs n + alpha >= 0 (n = {n}, alpha = {alpha})")));
    }
    let coeffs = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(
                binomial(top as u64, (n - k) as u64) * BigInt::from(sign),
                factorial(k as u64),
            )
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// `(x / n) L_{n-1}^(1)(-x)`.
pub fn laguerre_form(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("the Laguerre form needs n >= 1".into()));
    }
    let l = laguerre_poly(n - 1, 1)?.reflect();
    Ok(l.shift_degree(1).scale(&Rational::new(BigInt::one(), BigInt::from(n))))
}

/// Whether `P_n^{psi_1}` from `seq` equals `(x / n) L_{n-1}^(1)(-x)`.
pub fn laguerre_identity_holds(seq: &PolySequence, n: usize) -> Result<bool> {
    Ok(seq.poly(n)? == &laguerre_form(n)?)
}

pub fn laguerre_identity_check(n: usize) -> Result<bool> {
    let seq = generate(&ArithFnSpec::new(ArithFn::Psi(1)), n);
    laguerre_identity_holds(&seq, n)
}

/// `Pi_n(x) = prod_{k<n} ((x - 1)/(k + 1) + 1) - ((x - 1)/(n + 1) + 1)^n`.
pub fn pi_n_poly(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("Pi_n needs n >= 1".into()));
    }
    let term = |k: usize| {
        let inv = Rational::new(BigInt::one(), BigInt::from(k + 1));
        // (x - 1)/(k + 1) + 1
        Polynomial::new(vec![Rational::one() - &inv, inv])
    };
    let mut prod = Polynomial::one();
    for k in 0..n {
        prod = &prod * &term(k);
    }
    Ok(&prod - &term(n).pow(n as u32))
}

/// Both sides of `x^(n+1)/n^(n+1) L_{n-1}^(1)(-x)^(n+1) > x^n/(n+1)^n L_n^(1)(-x)^n`,
/// evaluated exactly. Returns whether the strict inequality holds.
pub fn laguerre_root_inequality(n: usize, x: &Rational) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n >= 1 required".into()));
    }
    let neg_x = -x;
    let l_prev = laguerre_poly(n - 1, 1)?.eval(&neg_x);
    let l_next = laguerre_poly(n, 1)?.eval(&neg_x);
    let nn = Rational::from_integer(BigInt::from(n));
    let nn1 = Rational::from_integer(BigInt::from(n + 1));
    let lhs = rational::pow(&(x / &nn * l_prev), n as u32 + 1);
    let rhs = rational::pow(&(x / &nn1 * l_next), n as u32);
    Ok(lhs > rhs)
}
