//! Normalized arithmetic functions `g` with `g(1) = 1` and `g(n) > 0`.
//!
//! The registry is closed: divisor power sums `sigma_l`, pure powers `psi_l`,
//! the overpartition weight `gbar(n) = sigma_1(n) - sigma_1(n/2)`, and the
//! subgroup counts `g_l` of `Z^l` given by `g_l(n) = sum_{d | n} d g_{l-1}(d)`
//! with `g_0 = [n == 1]`.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ascending divisors of `n` by trial division up to `sqrt(n)`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("divisors of 0".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("arithmetic functions are defined for n >= 1".into()))
    } else {
        Ok(())
    }
}

/// `sigma_l(n) = sum_{d | n} d^l`.
pub fn eval_sigma(l: u32, n: u64) -> Result<BigInt> {
    check_positive(n)?;
    Ok(divisors(n)?
        .into_iter()
        .map(|d| num_traits::pow(BigInt::from(d), l as usize))
        .sum())
}

/// `psi_l(n) = n^l`.
pub fn eval_psi(l: u32, n: u64) -> Result<BigInt> {
    check_positive(n)?;
    Ok(num_traits::pow(BigInt::from(n), l as usize))
}

/// `gbar(n) = sigma_1(n) - sigma_1(n / 2)`, the second term vanishing for odd `n`.
pub fn eval_gbar(n: u64) -> Result<BigInt> {
    let s = eval_sigma(1, n)?;
    Ok(if n.is_multiple_of(2) { s - eval_sigma(1, n / 2)? } else { s })
}

/// `g_l(1..=n_max)` by the divisor recursion, all levels tabulated bottom-up.
fn gell_table(l: u32, n_max: usize) -> Vec<BigInt> {
    // level 0: indicator of n == 1; index 0 unused.
    let mut prev: Vec<BigInt> = (0..=n_max).map(|n| BigInt::from((n == 1) as u8)).collect();
    for _ in 0..l {
        let mut next = vec![BigInt::zero(); n_max + 1];
        for (d, v) in prev.iter().enumerate().skip(1) {
            if v.is_zero() {
                continue;
            }
            let term = v * BigInt::from(d);
            for m in (d..=n_max).step_by(d) {
                next[m] += &term;
            }
        }
        prev = next;
    }
    prev
}

pub fn eval_gell(l: u32, n: u64) -> Result<BigInt> {
    check_positive(n)?;
    if l == 0 {
        return Err(Error::InvalidArgument("gell requires l >= 1".into()));
    }
    Ok(gell_table(l, n as usize).swap_remove(n as usize))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithFn {
    Sigma(u32),
    Psi(u32),
    GBar,
    GEll(u32),
}

impl ArithFn {
    pub fn eval(&self, n: u64) -> Result<BigInt> {
        match *self {
            ArithFn::Sigma(l) => eval_sigma(l, n),
            ArithFn::Psi(l) => eval_psi(l, n),
            ArithFn::GBar => eval_gbar(n),
            ArithFn::GEll(l) => eval_gell(l, n),
        }
    }

    /// Every registered family, with the parameters exercised by the checks.
    pub fn registered() -> Vec<ArithFn> {
        vec![
            ArithFn::Sigma(1),
            ArithFn::Sigma(2),
            ArithFn::Psi(0),
            ArithFn::Psi(1),
            ArithFn::Psi(2),
            ArithFn::GBar,
            ArithFn::GEll(3),
            ArithFn::GEll(4),
        ]
    }
}

impl fmt::Display for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithFn::Sigma(l) => write!(f, "sigma:{l}"),
            ArithFn::Psi(l) => write!(f, "psi:{l}"),
            ArithFn::GBar => write!(f, "gbar"),
            ArithFn::GEll(l) => write!(f, "gell:{l}"),
        }
    }
}

impl FromStr for ArithFn {
    type Err = Error;

    /// `sigma:<l>` | `psi:<l>` | `gbar` | `gell:<l>` (with `l >= 1` for gell).
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "arithmetic function spec",
            input: s.to_string(),
        };
        let s = s.trim();
        if s == "gbar" {
            return Ok(ArithFn::GBar);
        }
        let (name, param) = s.split_once(':').ok_or_else(err)?;
        if param.is_empty() || !param.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let l: u32 = param.parse().map_err(|_| err())?;
        match name {
            "sigma" => Ok(ArithFn::Sigma(l)),
            "psi" => Ok(ArithFn::Psi(l)),
            "gell" if l >= 1 => Ok(ArithFn::GEll(l)),
            _ => Err(err()),
        }
    }
}

/// An [`ArithFn`] with a memo table of `g(1..)`.
///
/// The cache sits behind a mutex so a shared spec can be evaluated from
/// several threads.
#[derive(Debug)]
pub struct ArithFnSpec {
    kind: ArithFn,
    cache: Mutex<Vec<BigInt>>,
}

impl Clone for ArithFnSpec {
    fn clone(&self) -> Self {
        Self {
            kind: self.kind,
            cache: Mutex::new(self.cache.lock().expect("poisoned cache").clone()),
        }
    }
}

impl PartialEq for ArithFnSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl From<ArithFn> for ArithFnSpec {
    fn from(kind: ArithFn) -> Self {
        Self::new(kind)
    }
}

impl FromStr for ArithFnSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }
}

impl fmt::Display for ArithFnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

impl ArithFnSpec {
    pub fn new(kind: ArithFn) -> Self {
        // index 0 is a placeholder so that cache[n] = g(n)
        Self {
            kind,
            cache: Mutex::new(vec![BigInt::zero()]),
        }
    }

    pub fn kind(&self) -> ArithFn {
        self.kind
    }

    /// `g(1), ..., g(n_max)` as a vector indexed from 1 (index 0 holds 0).
    pub fn table(&self, n_max: usize) -> Vec<BigInt> {
        let mut cache = self.cache.lock().expect("poisoned cache");
        if cache.len() <= n_max {
            match self.kind {
                ArithFn::GEll(l) => *cache = gell_table(l, n_max),
                kind => {
                    for n in cache.len()..=n_max {
                        let v = kind.eval(n as u64).expect("n >= 1");
                        cache.push(v);
                    }
                }
            }
            cache[0] = BigInt::zero();
        }
        cache[..=n_max].to_vec()
    }

    pub fn eval(&self, n: u64) -> Result<BigInt> {
        check_positive(n)?;
        Ok(self.table(n as usize).swap_remove(n as usize))
    }

    pub fn is_normalized(&self) -> bool {
        self.eval(1).is_ok_and(|v| v.is_one())
    }
}
