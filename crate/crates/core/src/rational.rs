//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! gcd-reduced with a positive denominator; zero is `0/1`. `Display` renders
//! `num/den` (or just `num` for integers), which is the wire format used in
//! CSV output.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Sign as -1, 0 or +1.
pub fn signum(r: &Rational) -> i8 {
    sign_of(r.numer())
}

pub fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    Rational::new_raw(
        num_traits::pow(base.numer().clone(), exp as usize),
        num_traits::pow(base.denom().clone(), exp as usize),
    )
}

/// Parses `a/b`, an integer, or a decimal literal such as `-0.125` or `1e-6`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| err())?);
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= Rational::from_integer(factor);
    } else {
        value /= Rational::from_integer(factor);
    }
    Ok(if negative { -value } else { value })
}

/// Natural logarithm of a positive big integer, accurate to f64 precision even
/// when the integer overflows f64.
pub fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "ln of non-positive integer");
    let bits = n.bits();
    if bits <= 1000 {
        if let Some(v) = n.to_f64() {
            if v.is_finite() {
                return v.ln();
            }
        }
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::MAX);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn ln_rational(r: &Rational) -> f64 {
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

/// Best-effort f64 approximation (presentation only).
pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            let s = signum(r) as f64;
            if s == 0.0 {
                0.0
            } else {
                s * ln_rational(&r.abs()).exp()
            }
        }
    }
}

/// Exact decimal rendering of `r` rounded half away from zero to `decimals`
/// places.
pub fn to_decimal_string(r: &Rational, decimals: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), decimals);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice_rem: BigInt = rem * 2;
    let rounded = match twice_rem.cmp(scaled.denom()) {
        Ordering::Less => q,
        _ => q + 1,
    };
    let (ip, fp) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded_is_zero(&ip, &fp) {
        "-"
    } else {
        ""
    };
    if decimals == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{:0>width$}", fp.to_string(), width = decimals)
    }
}

fn rounded_is_zero(ip: &BigInt, fp: &BigInt) -> bool {
    ip.is_zero() && fp.is_zero()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
