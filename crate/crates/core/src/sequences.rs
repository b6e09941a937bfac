//! Integer counting sequences and the root/quotient comparisons on them.
//!
//! For a positive sequence `a` write `R(n) = a(n)^(1/n)` and
//! `Q(n) = a(n)/a(n-1)`. Every comparison here is done on integers after
//! clearing roots; floating point only appears in [`display_root`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{ArithFn, ArithFnSpec};
use crate::darcais::generate;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSequence {
    pub name: String,
    pub values: Vec<BigInt>,
}

impl IntegerSequence {
    pub fn new(name: impl Into<String>, values: Vec<BigInt>) -> Self {
        Self { name: name.into(), values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> Result<&BigInt> {
        self.values.get(n).ok_or(Error::MissingIndex(n))
    }
}

/// `a(0) = 1`, `a(n) = (1/n) sum_{k=1..n} g(k) a(n-k)`; `g` is indexed from 1.
/// Errors if a division leaves a remainder.
pub fn wohlfahrt_from_values(name: &str, g: &[BigInt], n_max: usize) -> Result<IntegerSequence> {
    if g.len() <= n_max {
        return Err(Error::MissingIndex(g.len()));
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    a.push(BigInt::one());
    for n in 1..=n_max {
        let mut sum = BigInt::zero();
        for k in 1..=n {
            sum += &g[k] * &a[n - k];
        }
        let (q, r) = sum.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::NonIntegral { n });
        }
        a.push(q);
    }
    Ok(IntegerSequence::new(name, a))
}

pub fn wohlfahrt_sequence(g: &ArithFnSpec, n_max: usize) -> Result<IntegerSequence> {
    wohlfahrt_from_values(&g.to_string(), &g.table(n_max.max(1)), n_max)
}

fn scaled_table(kind: ArithFn, factor: u64, n_max: usize) -> Vec<BigInt> {
    let f = BigInt::from(factor);
    ArithFnSpec::new(kind)
        .table(n_max.max(1))
        .into_iter()
        .map(|v| v * &f)
        .collect()
}

/// `p(n)`.
pub fn partitions(n_max: usize) -> IntegerSequence {
    colored_partitions(1, n_max).expect("p(n) is integral")
}

/// `p_k(n)` from the recursion with `g = k sigma_1`.
pub fn colored_partitions(k: u64, n_max: usize) -> Result<IntegerSequence> {
    if k == 0 {
        return Err(Error::InvalidArgument("k-colored partitions need k >= 1".into()));
    }
    let name = if k == 1 { "p".to_string() } else { format!("pk:{k}") };
    wohlfahrt_from_values(&name, &scaled_table(ArithFn::Sigma(1), k, n_max), n_max)
}

/// `p_k(n) = P_n^{sigma_1}(k)` from the polynomial sequence.
pub fn colored_partitions_via_polynomials(k: u64, n_max: usize) -> Result<IntegerSequence> {
    let seq = generate(&ArithFnSpec::new(ArithFn::Sigma(1)), n_max);
    values_as_integers(&format!("pk:{k}"), seq.value_table(&Rational::from_integer(BigInt::from(k))))
}

fn values_as_integers(name: &str, values: Vec<Rational>) -> Result<IntegerSequence> {
    values
        .into_iter()
        .enumerate()
        .map(|(n, v)| {
            if rational::is_integer(&v) {
                Ok(v.to_integer())
            } else {
                Err(Error::NonIntegral { n })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(|vals| IntegerSequence::new(name, vals))
}

/// `pp(n) = P_n^{sigma_2}(1)`.
pub fn plane_partitions(n_max: usize) -> IntegerSequence {
    wohlfahrt_from_values("pp", &scaled_table(ArithFn::Sigma(2), 1, n_max), n_max).expect("pp(n) is integral")
}

/// `pbar(n) = P_n^{gbar}(2)`, via the recursion with `g = 2 gbar`.
pub fn overpartitions(n_max: usize) -> IntegerSequence {
    wohlfahrt_from_values("pbar", &scaled_table(ArithFn::GBar, 2, n_max), n_max).expect("pbar(n) is integral")
}

pub fn overpartitions_via_polynomials(n_max: usize) -> Result<IntegerSequence> {
    let seq = generate(&ArithFnSpec::new(ArithFn::GBar), n_max);
    values_as_integers("pbar", seq.value_table(&rational::int(2)))
}

/// `N_l(n)`, the normalized number of commuting `l`-tuples in `S_n`.
pub fn commuting_tuples(l: u32, n_max: usize) -> Result<IntegerSequence> {
    if l == 0 {
        return Err(Error::InvalidArgument("N_l needs l >= 1".into()));
    }
    wohlfahrt_from_values(&format!("Nell:{l}"), &scaled_table(ArithFn::GEll(l), 1, n_max), n_max)
}

/// Sequence by CLI name: `p`, `pk:<k>`, `pp`, `pbar`, `Nell:<l>`.
pub fn by_name(name: &str, n_max: usize) -> Result<IntegerSequence> {
    let err = || Error::Parse {
        what: "sequence name",
        input: name.to_string(),
    };
    let param = |s: &str| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        s.parse().map_err(|_| err())
    };
    match name.split_once(':') {
        None => match name {
            "p" => Ok(partitions(n_max)),
            "pp" => Ok(plane_partitions(n_max)),
            "pbar" => Ok(overpartitions(n_max)),
            _ => Err(err()),
        },
        Some(("pk", k)) => colored_partitions(param(k)?, n_max),
        Some(("Nell", l)) => {
            let l = param(l)?;
            let l = u32::try_from(l).map_err(|_| err())?;
            commuting_tuples(l, n_max)
        }
        _ => Err(err()),
    }
}

/// `a(n)^(n+1)` against `a(n+1)^n`, i.e. `R(n)` against `R(n+1)`.
pub fn root_comparison(seq: &IntegerSequence, n: usize) -> Result<Ordering> {
    if n == 0 {
        return Err(Error::InvalidArgument("root comparison needs n >= 1".into()));
    }
    let a = seq.get(n)?;
    let b = seq.get(n + 1)?;
    Ok(num_traits::pow(a.clone(), n + 1).cmp(&num_traits::pow(b.clone(), n)))
}

/// Strict `a(n)^(n+1) > a(n+1)^n`.
pub fn root_decreasing_check(seq: &IntegerSequence, n: usize) -> Result<bool> {
    Ok(root_comparison(seq, n)? == Ordering::Greater)
}

/// Indices in `from..=to` where [`root_decreasing_check`] fails.
pub fn root_decreasing_failures(seq: &IntegerSequence, from: usize, to: usize) -> Result<Vec<usize>> {
    if to + 1 > seq.n_max() {
        return Err(Error::MissingIndex(to + 1));
    }
    let check = |n: usize| root_decreasing_check(seq, n).map(|ok| (!ok).then_some(n));
    #[cfg(feature = "parallel")]
    let results: Vec<Result<Option<usize>>> = {
        use rayon::prelude::*;
        (from..=to).into_par_iter().map(check).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Option<usize>>> = (from..=to).map(check).collect();
    Ok(results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

/// `a(n)^2 >= a(n-1) a(n+1)`.
pub fn is_log_concave_at(seq: &IntegerSequence, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("log-concavity needs n >= 1".into()));
    }
    let a = seq.get(n)?;
    Ok(a * a >= seq.get(n - 1)? * seq.get(n + 1)?)
}

/// Indices in `from..=to` violating log-concavity.
pub fn log_concavity_scan(seq: &IntegerSequence, from: usize, to: usize) -> Result<Vec<usize>> {
    let mut failures = Vec::new();
    for n in from..=to {
        if !is_log_concave_at(seq, n)? {
            failures.push(n);
        }
    }
    Ok(failures)
}

/// Evaluates `R(n) > Q(n)`, `R(n-1) > R(n)` and `R(n-1) > Q(n)` separately
/// (each cleared to an integer comparison) and reports whether all three
/// agree. For `n = 1` the root `R(0)` is read through the cleared forms.
pub fn equivalence_property(seq: &IntegerSequence, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("equivalences need n >= 1".into()));
    }
    let cur = seq.get(n)?;
    let prev = seq.get(n - 1)?;
    let e = n;
    // R(n)^n = a(n) against Q(n)^n = a(n)^n / a(n-1)^n
    let r_gt_q = cur * num_traits::pow(prev.clone(), e) > num_traits::pow(cur.clone(), e);
    // R(n-1)^(n(n-1)) = a(n-1)^n against R(n)^(n(n-1)) = a(n)^(n-1)
    let r_prev_gt_r = num_traits::pow(prev.clone(), e) > num_traits::pow(cur.clone(), e - 1);
    // R(n-1)^(n-1) = a(n-1) against Q(n)^(n-1) = a(n)^(n-1) / a(n-1)^(n-1)
    let r_prev_gt_q = prev * num_traits::pow(prev.clone(), e - 1) > num_traits::pow(cur.clone(), e - 1);
    Ok(r_gt_q == r_prev_gt_r && r_prev_gt_r == r_prev_gt_q)
}

/// `a(n)^(1/n)` rounded to `decimals` places; presentation only.
pub fn display_root(value: &BigInt, n: usize, decimals: usize) -> String {
    if n == 0 {
        return String::new();
    }
    let ln = rational::ln_bigint(value) / n as f64;
    format!("{:.*}", decimals, ln.exp())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootQuotientReport {
    pub n: usize,
    /// `a(n)^(n+1) > a(n+1)^n`.
    pub root_decreasing: bool,
    /// `a(n)^2 >= a(n-1) a(n+1)`.
    pub logconcave: bool,
    pub display_root: String,
}

pub fn root_quotient_report(seq: &IntegerSequence, n: usize, decimals: usize) -> Result<RootQuotientReport> {
    Ok(RootQuotientReport {
        n,
        root_decreasing: root_decreasing_check(seq, n)?,
        logconcave: is_log_concave_at(seq, n)?,
        display_root: display_root(seq.get(n)?, n, decimals),
    })
}

/// Outcome of the log-concavity-with-initial-condition argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneReport {
    pub n0: usize,
    pub horizon: usize,
    /// Indices in `n0..horizon` where log-concavity fails.
    pub logconcave_failures: Vec<usize>,
    /// `R(n0 - 1) > R(n0)`.
    pub initial_condition: bool,
    /// Strict decrease on `[n0 - 1, horizon]` follows by induction.
    pub by_induction: bool,
    /// Indices `n` in `n0 - 1..horizon` with `R(n) <= R(n + 1)`.
    pub direct_failures: Vec<usize>,
}

impl MonotoneReport {
    pub fn decreasing(&self) -> bool {
        self.by_induction && self.direct_failures.is_empty()
    }

    /// The two routes must never disagree when the preconditions hold.
    pub fn consistent(&self) -> bool {
        !self.by_induction || self.direct_failures.is_empty()
    }
}

/// Checks that `R` is strictly decreasing on `[n0 - 1, horizon]`: by
/// log-concavity on `[n0, horizon - 1]` plus the initial condition
/// `R(n0 - 1) > R(n0)`, and independently by direct comparison of every
/// consecutive pair.
pub fn monotone_root_verify(seq: &IntegerSequence, n0: usize, horizon: usize) -> Result<MonotoneReport> {
    if n0 < 2 {
        return Err(Error::InvalidArgument("n0 >= 2 required so that R(n0 - 1) is defined".into()));
    }
    if horizon <= n0 {
        return Err(Error::InvalidArgument("horizon must exceed n0".into()));
    }
    if seq.n_max() < horizon {
        return Err(Error::MissingIndex(horizon));
    }
    let logconcave_failures = log_concavity_scan(seq, n0, horizon - 1)?;
    let initial_condition = root_decreasing_check(seq, n0 - 1)?;
    let by_induction = logconcave_failures.is_empty() && initial_condition;
    let direct_failures = root_decreasing_failures(seq, n0 - 1, horizon - 1)?;
    Ok(MonotoneReport {
        n0,
        horizon,
        logconcave_failures,
        initial_condition,
        by_induction,
        direct_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn commuting_tuple_tables() {
        let n2 = commuting_tuples(2, 10).unwrap();
        assert_eq!(n2.values, vals(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]));
        assert_eq!(commuting_tuples(3, 6).unwrap().values[6], BigInt::from(92));
        assert_eq!(commuting_tuples(4, 10).unwrap().values[10], BigInt::from(38497));
        assert_eq!(commuting_tuples(1, 8).unwrap().values, vals(&[1; 9]));
    }

    #[test]
    fn non_integral_division_is_reported() {
        // g = (_, 1, 2): a(2) = (2 + 1) / 2 is not an integer
        let g = vals(&[0, 1, 2]);
        assert_eq!(wohlfahrt_from_values("bad", &g, 2), Err(Error::NonIntegral { n: 2 }));
    }

    #[test]
    fn colored_examples() {
        assert_eq!(colored_partitions(1, 10).unwrap().values, partitions(10).values);
        let p2 = colored_partitions(2, 2).unwrap();
        assert_eq!(&p2.values[1..], &vals(&[2, 5])[..]);
        assert_eq!(root_comparison(&p2, 1).unwrap(), Ordering::Less);
        let p3 = colored_partitions(3, 2).unwrap();
        assert_eq!(&p3.values[1..], &vals(&[3, 9])[..]);
        assert_eq!(root_comparison(&p3, 1).unwrap(), Ordering::Equal);
        assert!(colored_partitions(0, 3).is_err());
    }

    #[test]
    fn colored_two_paths() {
        for k in 1..=4 {
            assert_eq!(
                colored_partitions(k, 40).unwrap().values,
                colored_partitions_via_polynomials(k, 40).unwrap().values
            );
        }
    }

    #[test]
    fn plane_and_over() {
        let pp = plane_partitions(10);
        assert_eq!(pp.values, vals(&[1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]));
        let pb = overpartitions(7);
        assert_eq!(pb.values, vals(&[1, 2, 4, 8, 14, 24, 40, 64]));
        assert_eq!(overpartitions_via_polynomials(30).unwrap().values, overpartitions(30).values);
    }

    #[test]
    fn root_checks() {
        let p = partitions(10);
        assert!(root_decreasing_check(&p, 6).unwrap());
        assert!(!root_decreasing_check(&p, 5).unwrap());
        let pb = overpartitions(5);
        assert!(!root_decreasing_check(&pb, 2).unwrap());
        assert_eq!(root_comparison(&pb, 2).unwrap(), Ordering::Equal);
        assert_eq!(root_comparison(&p, 10), Err(Error::MissingIndex(11)));
    }

    #[test]
    fn equivalences() {
        assert!(equivalence_property(&partitions(10), 6).unwrap());
        assert!(equivalence_property(&plane_partitions(10), 3).unwrap());
        let constant = IntegerSequence::new("const", vals(&[1; 12]));
        for n in 1..=10 {
            assert!(equivalence_property(&constant, n).unwrap());
        }
    }

    #[test]
    fn log_concavity_small() {
        let p = partitions(30);
        assert!(!log_concavity_scan(&p, 2, 25).unwrap().is_empty());
        assert!(log_concavity_scan(&p, 26, 29).unwrap().is_empty());
    }

    #[test]
    fn display_roots() {
        let p = partitions(7);
        let shown: Vec<String> = (1..=7).map(|n| display_root(&p.values[n], n, 2)).collect();
        assert_eq!(shown, ["1.00", "1.41", "1.44", "1.50", "1.48", "1.49", "1.47"]);
        assert_eq!(display_root(&BigInt::from(3), 2, 3), "1.732");
    }

    #[test]
    fn monotone_over() {
        let pb = overpartitions(60);
        let r = monotone_root_verify(&pb, 4, 60).unwrap();
        assert!(r.decreasing() && r.consistent());
        let r = monotone_root_verify(&pb, 3, 60).unwrap();
        assert!(!r.initial_condition);
        assert!(!r.by_induction);
        assert_eq!(r.direct_failures, vec![2]);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("Nell:4", 10).unwrap().values[10], BigInt::from(38497));
        assert_eq!(by_name("pk:2", 2).unwrap().values[2], BigInt::from(5));
        assert!(by_name("q", 3).is_err());
        assert!(by_name("pk:x", 3).is_err());
        assert!(by_name("pk:0", 3).is_err());
    }
}
