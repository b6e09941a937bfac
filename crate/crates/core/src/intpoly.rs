//! Dense integer polynomials.
//!
//! This is the internal workhorse behind [`crate::Polynomial`]: scaled
//! D'Arcais polynomials `n! P_n` live here, difference polynomials are
//! expanded here, and root isolation runs entirely on integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::sign_of;

const KARATSUBA_THRESHOLD: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Splits off the largest power of `x` dividing `self`: returns `(k, q)`
    /// with `self = x^k q` and `q(0) != 0`. The zero polynomial gives `(0, 0)`.
    pub fn strip_x_power(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k == self.coeffs.len() {
            return (0, Self::zero());
        }
        (k, Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `self^e`. When `self(0) != 0` this uses the linear recurrence implied by
    /// `p * (p^e)' = e * p' * p^e`, which costs `O(deg(p) * deg(p^e))`
    /// coefficient operations instead of a chain of full multiplications.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.is_zero() {
            return Self::zero();
        }
        let (k, q) = self.strip_x_power();
        q.pow_nonzero_constant(e).shift_degree(k * e as usize)
    }

    fn pow_nonzero_constant(&self, e: u32) -> Self {
        let m = self.coeffs.len() - 1;
        if m == 0 {
            return Self::new(vec![num_traits::pow(self.coeffs[0].clone(), e as usize)]);
        }
        let p = &self.coeffs;
        let total = m * e as usize;
        let e1 = BigInt::from(e as u64 + 1);
        let mut out: Vec<BigInt> = Vec::with_capacity(total + 1);
        out.push(num_traits::pow(p[0].clone(), e as usize));
        for k in 1..=total {
            let mut acc = BigInt::zero();
            for j in 1..=k.min(m) {
                if p[j].is_zero() {
                    continue;
                }
                // ((e + 1) j - k) p_j q_{k - j}
                let w = &e1 * BigInt::from(j) - BigInt::from(k);
                if w.is_zero() {
                    continue;
                }
                acc += w * &p[j] * &out[k - j];
            }
            let den = &p[0] * BigInt::from(k);
            let (q, r) = acc.div_rem(&den);
            debug_assert!(r.is_zero(), "power recurrence must divide exactly");
            out.push(q);
        }
        Self::new(out)
    }

    /// Repeated squaring; independent of [`IntPoly::pow`].
    pub fn pow_by_squaring(&self, mut e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `q(x) = p(x + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        if a.is_zero() || c.len() < 2 {
            return self.clone();
        }
        let d = c.len() - 1;
        let unit = a.is_one();
        for i in 0..d {
            for j in (i..d).rev() {
                let (lo, hi) = c.split_at_mut(j + 1);
                if unit {
                    lo[j] += &hi[0];
                } else {
                    lo[j] += &hi[0] * a;
                }
            }
        }
        Self::new(c)
    }

    /// `p(x + 1)`.
    pub fn taylor_shift_one(&self) -> Self {
        self.taylor_shift(&BigInt::one())
    }

    /// `2^(k d) p(x / 2^k)` for `k >= 0`, i.e. coefficient `i` times `2^(k (d - i))`.
    pub fn halve_var(&self, k: u64) -> Self {
        let d = match self.degree() {
            Some(d) => d,
            None => return Self::zero(),
        };
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << (k * (d - i) as u64))
                .collect(),
        }
    }

    /// `p(2^k x)`: coefficient `i` times `2^(k i)`.
    pub fn double_var(&self, k: u64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << (k * i as u64))
                .collect(),
        }
    }

    /// `q^d p(x / q)`: coefficient `i` times `q^(d - i)`.
    pub fn scale_var_inverse(&self, q: &BigInt) -> Self {
        let d = match self.degree() {
            Some(d) => d,
            None => return Self::zero(),
        };
        let mut out = self.coeffs.clone();
        let mut power = BigInt::one();
        for i in (0..d).rev() {
            power *= q;
            out[i] *= &power;
        }
        Self::new(out)
    }

    /// `x^d p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Drops the common power-of-two factor of the coefficients.
    pub fn remove_two_power(&self) -> Self {
        let tz = self
            .coeffs
            .iter()
            .filter_map(|c| c.trailing_zeros())
            .min()
            .unwrap_or(0);
        if tz == 0 {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c >> tz).collect(),
        }
    }

    /// Number of sign changes in the coefficient sequence (zeros skipped),
    /// counting stops once `limit` is reached.
    pub fn sign_variations(&self, limit: usize) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for c in &self.coeffs {
            let s = sign_of(c);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
                if count >= limit {
                    return count;
                }
            }
            last = s;
        }
        count
    }

    /// Sign of `p(c / 2^k)`.
    pub fn sign_at_dyadic(&self, c: &BigInt, k: u64) -> i8 {
        let d = match self.degree() {
            Some(d) => d,
            None => return 0,
        };
        // Homogeneous Horner: sum_i a_i c^i 2^(k (d - i)).
        let mut h = self.coeffs[d].clone();
        for i in (0..d).rev() {
            h = h * c + (&self.coeffs[i] << (k * (d - i) as u64));
        }
        sign_of(&h)
    }

    /// `q^d p(num / q)`, exact.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let d = match self.degree() {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        let mut h = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            h = h * num + &self.coeffs[i] * &den_pow;
        }
        h
    }

    /// Sign of `p(num / den)` for `den > 0`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        sign_of(&self.eval_homogeneous(num, den))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    if a1.is_empty() || b1.is_empty() {
        // Unbalanced: split only the longer operand.
        let (long, short) = if a1.is_empty() { (b, a) } else { (a, b) };
        let (l0, l1) = long.split_at(half);
        let lo = karatsuba(l0, short);
        let hi = karatsuba(l1, short);
        let mut out = vec![BigInt::zero(); long.len() + short.len() - 1];
        for (i, c) in lo.into_iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in hi.into_iter().enumerate() {
            out[i + half] += c;
        }
        return out;
    }
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let sa = add_slices(a0, a1, false);
    let sb = add_slices(b0, b1, false);
    let z1 = karatsuba(&sa, &sb);
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] += c;
        out[i + half] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * half] += c;
        out[i + half] -= c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        out[i + half] += c;
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_slices(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_slices(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(karatsuba(&self.coeffs, &rhs.coeffs))
    }
}
