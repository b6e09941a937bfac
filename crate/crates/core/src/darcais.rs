//! The polynomial sequence `P_n^g` and the hook-length oracle for `g = sigma_1`.
//!
//! Internally every `P_n` is stored scaled as `A_n = n! P_n`, which has
//! integer coefficients whenever `g` is integer-valued:
//!
//! ```text
//! A_n = x * sum_{k=1..n} g(k) (n-1)!/(n-k)! A_{n-k}
//! ```
//!
//! The exact rational `P_n` is exposed alongside.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::ArithFnSpec;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Largest `n` accepted by [`enumerate_partitions`].
pub const PARTITION_ENUMERATION_MAX: usize = 40;
/// Largest `n` accepted by [`nekrasov_okounkov_oracle`].
pub const HOOK_ORACLE_MAX: usize = 15;

#[derive(Clone, Debug)]
pub struct PolySequence {
    label: String,
    g: Vec<BigInt>,
    scaled: Vec<IntPoly>,
    factorials: Vec<BigInt>,
    polys: Vec<Polynomial>,
}

/// `P_0, ..., P_{n_max}` for the given arithmetic function.
pub fn generate(g: &ArithFnSpec, n_max: usize) -> PolySequence {
    // one extra value so that callers can ask for g(n_max + 1) cheaply
    let values = g.table(n_max.max(1));
    PolySequence::from_values(&g.to_string(), &values, n_max)
        .expect("registered arithmetic functions are normalized")
}

impl PolySequence {
    /// Builds the sequence from explicit values `g[1..]` (`g[0]` is ignored).
    /// Requires `g(1) = 1` and values for every index up to `n_max`.
    pub fn from_values(label: &str, g: &[BigInt], n_max: usize) -> Result<Self> {
        if g.len() < 2 || !g[1].is_one() {
            return Err(Error::InvalidArgument("g must be normalized: g(1) = 1".into()));
        }
        if g.len() <= n_max {
            return Err(Error::MissingIndex(g.len()));
        }
        let mut scaled: Vec<IntPoly> = Vec::with_capacity(n_max + 1);
        let mut factorials = vec![BigInt::one()];
        scaled.push(IntPoly::one());
        for n in 1..=n_max {
            factorials.push(&factorials[n - 1] * BigInt::from(n));
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); n];
            // falling factorial (n-1)(n-2)...(n-k+1)
            let mut falling = BigInt::one();
            for k in 1..=n {
                if k > 1 {
                    falling *= BigInt::from(n - k + 1);
                }
                let w = &g[k] * &falling;
                for (i, c) in scaled[n - k].coeffs().iter().enumerate() {
                    acc[i] += &w * c;
                }
            }
            scaled.push(IntPoly::new(acc).shift_degree(1));
        }
        let polys = scaled
            .iter()
            .zip(&factorials)
            .map(|(a, f)| Polynomial::from_int_poly(a, &Rational::new(BigInt::one(), f.clone())))
            .collect();
        Ok(Self {
            label: label.to_string(),
            g: g[..=n_max.max(1)].to_vec(),
            scaled,
            factorials,
            polys,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Largest index present.
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn poly(&self, n: usize) -> Result<&Polynomial> {
        self.polys.get(n).ok_or(Error::MissingIndex(n))
    }

    /// `n! P_n` with integer coefficients.
    pub fn scaled(&self, n: usize) -> Result<&IntPoly> {
        self.scaled.get(n).ok_or(Error::MissingIndex(n))
    }

    pub fn factorial(&self, n: usize) -> Result<&BigInt> {
        self.factorials.get(n).ok_or(Error::MissingIndex(n))
    }

    /// `g(n)` for `1 <= n <= max(n_max, 1)`.
    pub fn g(&self, n: usize) -> Result<&BigInt> {
        if n == 0 {
            return Err(Error::MissingIndex(0));
        }
        self.g.get(n).ok_or(Error::MissingIndex(n))
    }

    /// Exact `P_n(x)`, evaluated on the integer form with a single division.
    pub fn value_at(&self, n: usize, x: &Rational) -> Result<Rational> {
        let a = self.scaled(n)?;
        let den = x.denom();
        let d = a.degree().unwrap_or(0) as u32;
        let num = a.eval_homogeneous(x.numer(), den);
        Ok(Rational::new(num, num_traits::pow(den.clone(), d as usize) * &self.factorials[n]))
    }

    /// `[P_0(x), ..., P_N(x)]`.
    pub fn value_table(&self, x: &Rational) -> Vec<Rational> {
        (0..=self.n_max())
            .map(|n| self.value_at(n, x).expect("index in range"))
            .collect()
    }
}

/// Partitions of `n` as non-increasing part lists, in lexicographically
/// decreasing order (`[n]` first, `[1, ..., 1]` last).
pub fn enumerate_partitions(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > PARTITION_ENUMERATION_MAX {
        return Err(Error::OutOfRange {
            what: "partition enumeration",
            n,
            max: PARTITION_ENUMERATION_MAX,
        });
    }
    fn go(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A partition together with the hook lengths of its Ferrers diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionHookData {
    pub partition: Vec<usize>,
    /// Row-major order over the cells of the diagram.
    pub hooks: Vec<usize>,
}

impl PartitionHookData {
    pub fn new(partition: Vec<usize>) -> Self {
        let hooks = hook_lengths(&partition);
        Self { partition, hooks }
    }
}

fn conjugate(partition: &[usize]) -> Vec<usize> {
    let width = partition.first().copied().unwrap_or(0);
    (0..width)
        .map(|j| partition.iter().take_while(|&&r| r > j).count())
        .collect()
}

/// Hook lengths `arm + leg + 1` for every cell, row by row.
pub fn hook_lengths(partition: &[usize]) -> Vec<usize> {
    let conj = conjugate(partition);
    let mut hooks = Vec::with_capacity(partition.iter().sum());
    for (i, &row) in partition.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            let arm = row - j - 1;
            let leg = col - i - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// `sum_{lambda |- n} prod_{h in H(lambda)} (1 + (x - 1)/h^2)`, expanded.
/// Independent of the recursion; it agrees with `P_n^{sigma_1}`.
pub fn nekrasov_okounkov_oracle(n: usize) -> Result<Polynomial> {
    if n > HOOK_ORACLE_MAX {
        return Err(Error::OutOfRange {
            what: "hook-length oracle",
            n,
            max: HOOK_ORACLE_MAX,
        });
    }
    let mut total = Polynomial::zero();
    for partition in enumerate_partitions(n)? {
        let mut term = Polynomial::one();
        for h in hook_lengths(&partition) {
            let h2 = Rational::from_integer(BigInt::from(h * h));
            // (x + h^2 - 1) / h^2
            let factor = Polynomial::new(vec![
                (h2.clone() - Rational::one()) / &h2,
                Rational::one() / &h2,
            ]);
            term = &term * &factor;
        }
        total = &total + &term;
    }
    Ok(total)
}
