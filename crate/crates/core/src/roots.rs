//! Real-root isolation by Descartes' rule of signs with dyadic bisection.
//!
//! A search node is an integer polynomial `q` whose roots in the open unit
//! interval correspond to the roots of the input in one dyadic subinterval
//! `[c 2^K / 2^k, (c + 1) 2^K / 2^k]`. The number of sign variations of
//! `(x + 1)^d q(1 / (x + 1))` bounds the number of roots in `(0, 1)` and has
//! the same parity; zero variations prove the node empty, one variation
//! proves exactly one simple root. Dyadic midpoints that happen to be roots
//! are detected exactly and reported as exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Depth (in bisection levels below the root bound) after which a search is
/// presumed stuck on a multiple root.
const MAX_DEPTH_BELOW_BOUND: u64 = 320;

/// Isolating intervals are narrowed to width `2^-SNAP_BITS` while probing for
/// a rational root, so roots with denominators up to about `2^(SNAP_BITS/2)`
/// come back exact.
const SNAP_BITS: u64 = 64;

/// A rational interval certified to contain exactly one real root.
///
/// When `exact` is set the root is that rational and `lo = hi = exact`.
/// Otherwise the isolating polynomial has opposite non-zero signs
/// `sign_lo`, `sign_hi` at the endpoints and a single root strictly between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl IsolatingInterval {
    pub fn exact(root: Rational) -> Self {
        Self {
            lo: root.clone(),
            hi: root.clone(),
            exact: Some(root),
            sign_lo: 0,
            sign_hi: 0,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// True when every point of the interval is `< bound`.
    pub fn lies_below(&self, bound: &Rational) -> bool {
        match &self.exact {
            Some(r) => r < bound,
            None => &self.hi <= bound,
        }
    }

    /// Image under `x -> (x + shift) / scale` for `scale > 0`.
    fn map_affine(&self, shift: &Rational, scale: &Rational) -> Self {
        let f = |r: &Rational| (r + shift) / scale;
        Self {
            lo: f(&self.lo),
            hi: f(&self.hi),
            exact: self.exact.as_ref().map(f),
            sign_lo: self.sign_lo,
            sign_hi: self.sign_hi,
        }
    }

    fn negated(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
            exact: self.exact.as_ref().map(|r| -r),
            sign_lo: self.sign_hi,
            sign_hi: self.sign_lo,
        }
    }
}

/// `K` such that every complex root `z` of `p` has `|z| < 2^K` (Fujiwara's
/// bound evaluated on coefficient bit lengths).
pub fn root_bound_log2(p: &IntPoly) -> u64 {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return 0,
    };
    let lead_bits = p.coeffs()[d].bits() as i64;
    let mut best: i64 = i64::MIN;
    for (i, c) in p.coeffs()[..d].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // |c / lead| < 2^(bits(c) - bits(lead) + 1)
        let num = c.bits() as i64 - lead_bits + 1;
        let m = (d - i) as i64;
        best = best.max(num.div_euclid(m) + (num.rem_euclid(m) != 0) as i64);
    }
    if best == i64::MIN {
        return 0;
    }
    (best + 1).max(0) as u64
}

/// The rational with the smallest denominator in `[lo, hi]` (smallest
/// absolute numerator among those).
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let up = &fl + Rational::one();
    if &up <= hi {
        return up;
    }
    // lo and hi share the integer part fl and lo > fl
    let inv_hi = (hi - &fl).recip();
    let inv_lo = (lo - &fl).recip();
    fl + simplest_between(&inv_hi, &inv_lo).recip()
}

fn descartes_unit(q: &IntPoly, limit: usize) -> usize {
    q.reverse().taylor_shift_one().sign_variations(limit)
}

struct Node {
    q: IntPoly,
    c: BigInt,
    k: u64,
}

/// Outcome of one node during the search.
enum Found {
    Isolated { c: BigInt, k: u64, q: IntPoly },
    Exact { c: BigInt, k: u64 },
}

/// Positive-root search state for an integer polynomial with `p(0) != 0`.
struct PositiveSearch<'a> {
    p: &'a IntPoly,
    bound_log2: u64,
    pub nodes: usize,
}

impl<'a> PositiveSearch<'a> {
    fn new(p: &'a IntPoly) -> Self {
        Self {
            p,
            bound_log2: root_bound_log2(p),
            nodes: 0,
        }
    }

    fn endpoint(&self, c: &BigInt, k: u64) -> Rational {
        Rational::new(c << self.bound_log2, BigInt::one() << k)
    }

    fn sign_at(&self, x: &Rational) -> i8 {
        self.p.sign_at(x.numer(), x.denom())
    }

    /// Splits a node; the middle entry is set when the midpoint is a root.
    fn split(&self, node: Node) -> (Node, Option<Found>, Node) {
        let left = node.q.halve_var(1).remove_two_power();
        let mut right = left.taylor_shift_one();
        let c2: BigInt = &node.c << 1;
        let k = node.k + 1;
        let (zeros, stripped) = right.strip_x_power();
        let mid = if zeros > 0 {
            right = stripped;
            Some(Found::Exact { c: &c2 + 1, k })
        } else {
            None
        };
        (
            Node { q: left, c: c2.clone(), k },
            mid,
            Node { q: right, c: c2 + 1, k },
        )
    }

    /// Depth-first search visiting roots from right to left. `visit` returns
    /// `false` to stop early.
    fn run(&mut self, mut visit: impl FnMut(Found) -> bool) -> Result<()> {
        if self.p.degree().unwrap_or(0) == 0 {
            return Ok(());
        }
        debug_assert!(!self.p.coeffs()[0].is_zero());
        // Stack entries pop in right-to-left order.
        enum Item {
            Search(Node),
            Emit(Found),
        }
        let root = Node {
            q: self.p.double_var(self.bound_log2),
            c: BigInt::zero(),
            k: 0,
        };
        let mut stack = vec![Item::Search(root)];
        while let Some(item) = stack.pop() {
            let node = match item {
                Item::Emit(found) => {
                    if !visit(found) {
                        return Ok(());
                    }
                    continue;
                }
                Item::Search(node) => node,
            };
            self.nodes += 1;
            match descartes_unit(&node.q, 2) {
                0 => {}
                1 => {
                    if !visit(Found::Isolated { c: node.c, k: node.k, q: node.q }) {
                        return Ok(());
                    }
                }
                _ => {
                    if node.k > MAX_DEPTH_BELOW_BOUND {
                        return Err(Error::InvalidArgument(
                            "root isolation did not separate roots; input is not square-free".into(),
                        ));
                    }
                    let (left, mid, right) = self.split(node);
                    stack.push(Item::Search(left));
                    if let Some(m) = mid {
                        stack.push(Item::Emit(m));
                    }
                    stack.push(Item::Search(right));
                }
            }
        }
        Ok(())
    }

    /// Turns a search hit into an interval with non-zero endpoint signs.
    fn to_interval(&self, found: Found) -> IsolatingInterval {
        match found {
            Found::Exact { c, k } => IsolatingInterval::exact(self.endpoint(&c, k)),
            Found::Isolated { mut c, mut k, mut q } => loop {
                let lo = self.endpoint(&c, k);
                let hi = self.endpoint(&(&c + 1), k);
                let (slo, shi) = (self.sign_at(&lo), self.sign_at(&hi));
                if slo != 0 && shi != 0 {
                    debug_assert!(slo != shi);
                    let iv = IsolatingInterval {
                        lo,
                        hi,
                        exact: None,
                        sign_lo: slo,
                        sign_hi: shi,
                    };
                    return self.snap(iv);
                }
                // An endpoint is itself a different root: move inward. Exactly one
                // root lies inside, so exactly one half has an odd variation count.
                let (left, mid, right) = self.split(Node { q, c, k });
                if let Some(m) = mid {
                    return self.to_interval(m);
                }
                let next = if descartes_unit(&left.q, usize::MAX) % 2 == 1 { left } else { right };
                c = next.c;
                k = next.k;
                q = next.q;
            },
        }
    }
}

impl PositiveSearch<'_> {
    /// Bisects down to width `2^-SNAP_BITS`, testing the simplest rational of
    /// every intermediate interval as a candidate root.
    fn snap(&self, mut iv: IsolatingInterval) -> IsolatingInterval {
        let target = Rational::new(BigInt::one(), BigInt::one() << SNAP_BITS);
        let two = Rational::from_integer(BigInt::from(2));
        loop {
            let cand = simplest_between(&iv.lo, &iv.hi);
            if cand != iv.lo && cand != iv.hi && self.sign_at(&cand) == 0 {
                return IsolatingInterval::exact(cand);
            }
            if iv.width() <= target {
                return iv;
            }
            let mid = (&iv.lo + &iv.hi) / &two;
            let s = self.sign_at(&mid);
            if s == 0 {
                return IsolatingInterval::exact(mid);
            }
            if s == iv.sign_lo {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
    }
}

/// Shrinks a sign-changing interval by bisection until its width is at most
/// `width`, or until a dyadic midpoint is an exact root.
pub fn refine(p: &IntPoly, interval: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    if interval.is_exact() {
        return interval.clone();
    }
    let mut cur = interval.clone();
    let two = Rational::from_integer(BigInt::from(2));
    while &cur.width() > width {
        let mid = (&cur.lo + &cur.hi) / &two;
        let s = p.sign_at(mid.numer(), mid.denom());
        if s == 0 {
            return IsolatingInterval::exact(mid);
        }
        if s == cur.sign_lo {
            cur.lo = mid;
        } else {
            cur.hi = mid;
        }
    }
    cur
}

/// Positive roots of `p` (which must satisfy `p(0) != 0`), right to left.
fn positive_roots(p: &IntPoly, largest_only: bool) -> Result<Vec<IsolatingInterval>> {
    let mut search = PositiveSearch::new(p);
    let mut hits = Vec::new();
    search.run(|found| {
        hits.push(found);
        !largest_only
    })?;
    Ok(hits.into_iter().map(|f| search.to_interval(f)).collect())
}

/// Result of a right-to-left search above zero.
pub struct PositiveRootReport {
    pub largest: Option<IsolatingInterval>,
    pub nodes_examined: usize,
}

/// Finds the largest positive root of `p` (any integer polynomial), falling
/// back to the square-free part if the direct search stalls on a multiple
/// root.
pub fn largest_positive_root(p: &IntPoly) -> Result<PositiveRootReport> {
    let (_, core) = p.strip_x_power();
    if core.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let attempt = |poly: &IntPoly| -> Result<PositiveRootReport> {
        let mut search = PositiveSearch::new(poly);
        let mut hit = None;
        search.run(|found| {
            hit = Some(found);
            false
        })?;
        Ok(PositiveRootReport {
            largest: hit.map(|f| search.to_interval(f)),
            nodes_examined: search.nodes,
        })
    };
    match attempt(&core) {
        Ok(r) => Ok(r),
        Err(_) => {
            let sqf = Polynomial::from_int_poly(&core, &Rational::one()).squarefree_part()?;
            let (_, prim) = sqf.to_primitive();
            attempt(&prim)
        }
    }
}

/// Bisects a positive interval `[0, hi]` of `core` until its left endpoint
/// is positive; `core(0)` must be non-zero.
fn off_zero(core: &IntPoly, iv: &IsolatingInterval) -> IsolatingInterval {
    let mut cur = iv.clone();
    let two = Rational::from_integer(BigInt::from(2));
    while cur.lo.is_zero() {
        let mid = &cur.hi / &two;
        let s = core.sign_at(mid.numer(), mid.denom());
        if s == 0 {
            return IsolatingInterval::exact(mid);
        }
        if s == cur.sign_lo {
            cur.lo = mid;
        } else {
            cur.hi = mid;
            cur.sign_hi = s;
        }
    }
    cur
}

/// Isolates every distinct real root of a non-zero polynomial; intervals are
/// disjoint and sorted in increasing order. Endpoint signs refer to the
/// primitive square-free part of `p`.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = p.squarefree_part()?;
    let (_, prim) = sqf.to_primitive();
    let (zero_mult, core) = prim.strip_x_power();
    let mut roots: Vec<IsolatingInterval> = positive_roots(&core.reflect(), false)?
        .into_iter()
        .map(|iv| iv.negated())
        .collect();
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    if zero_mult > 0 {
        roots.push(IsolatingInterval::exact(Rational::zero()));
    }
    let mut pos = positive_roots(&core, false)?;
    pos.reverse();
    roots.extend(pos);
    if zero_mult > 0 {
        for iv in roots.iter_mut().filter(|iv| !iv.is_exact()) {
            if iv.lo.is_zero() {
                *iv = off_zero(&core, iv);
            } else if iv.hi.is_zero() {
                *iv = off_zero(&core.reflect(), &iv.negated()).negated();
            }
        }
    }
    // Endpoint signs should refer to the full square-free part, not the core.
    for iv in roots.iter_mut().filter(|iv| !iv.is_exact()) {
        iv.sign_lo = prim.sign_at(iv.lo.numer(), iv.lo.denom());
        iv.sign_hi = prim.sign_at(iv.hi.numer(), iv.hi.denom());
    }
    Ok(roots)
}

/// Isolates the roots of `p` and refines each interval to at most `width`.
pub fn isolate_and_refine(p: &Polynomial, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    let sqf = p.squarefree_part()?;
    let (_, prim) = sqf.to_primitive();
    Ok(isolate_real_roots(p)?
        .into_iter()
        .map(|iv| refine(&prim, &iv, width))
        .collect())
}

/// Shifts `p` so that its roots above `a` become its positive roots:
/// returns `s(z) = q^d p((z + num) / q)` where `a = num / q`.
pub fn shift_to_threshold(p: &IntPoly, a: &Rational) -> IntPoly {
    p.scale_var_inverse(a.denom()).taylor_shift(a.numer())
}

/// Maps an interval of `s` from [`shift_to_threshold`] back to `p`'s variable.
pub fn unshift_interval(iv: &IsolatingInterval, a: &Rational) -> IsolatingInterval {
    let num = Rational::from_integer(a.numer().clone());
    let den = Rational::from_integer(a.denom().clone());
    iv.map_affine(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{self, int, ratio};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn contains(iv: &IsolatingInterval, x: f64) -> bool {
        let lo = rational::to_f64(&iv.lo);
        let hi = rational::to_f64(&iv.hi);
        lo <= x && x <= hi
    }

    #[test]
    fn difference_of_squares() {
        let roots = isolate_real_roots(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots[0], -1.0));
        assert!(contains(&roots[1], 1.0));
    }

    #[test]
    fn exact_integer_roots() {
        let delta1 = Polynomial::new(vec![int(0), ratio(-3, 2), ratio(1, 2)]);
        let roots = isolate_real_roots(&delta1).unwrap();
        assert_eq!(roots, vec![IsolatingInterval::exact(int(0)), IsolatingInterval::exact(int(3))]);
    }

    #[test]
    fn irrational_roots_refined() {
        // x^3 - 2
        let roots = isolate_and_refine(&p(&[-2, 0, 0, 1]), &ratio(1, 1_000_000)).unwrap();
        assert_eq!(roots.len(), 1);
        let iv = &roots[0];
        assert!(iv.width() <= ratio(1, 1_000_000));
        assert!(contains(iv, 2f64.cbrt()));
        assert_eq!(iv.sign_lo, -1);
        assert_eq!(iv.sign_hi, 1);
    }

    #[test]
    fn multiple_roots_are_reduced() {
        // (x - 1)^3 (x + 2)^2 (x^2 + 1)
        let a = p(&[-1, 1]).pow(3);
        let b = p(&[2, 1]).pow(2);
        let c = p(&[1, 0, 1]);
        let roots = isolate_real_roots(&(&(&a * &b) * &c)).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].exact, Some(int(-2)));
        assert_eq!(roots[1].exact, Some(int(1)));
    }

    #[test]
    fn close_roots_separated() {
        // (x - 1/3)(x - 1/3 - 1/1000)(x + 7)
        let a = Polynomial::new(vec![ratio(-1, 3), int(1)]);
        let b = Polynomial::new(vec![ratio(-1003, 3000), int(1)]);
        let c = p(&[7, 1]);
        let roots = isolate_real_roots(&(&(&a * &b) * &c)).unwrap();
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert!(contains(&roots[1], 1.0 / 3.0));
        assert!(contains(&roots[2], 1.003 / 3.0));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(isolate_real_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn largest_positive_root_with_negative_multiple_roots() {
        // x (x - 5) (x + 1)^4: the stall-prone part is away from the positive axis
        let poly = &(&p(&[0, 1]) * &p(&[-5, 1])) * &p(&[1, 1]).pow(4);
        let (_, prim) = poly.to_primitive();
        let r = largest_positive_root(&prim).unwrap();
        assert_eq!(r.largest.unwrap().exact, Some(int(5)));
    }

    #[test]
    fn largest_positive_root_falls_back_to_squarefree() {
        // (x - sqrt 2)^2 (x - 1/3) stalls at the double irrational root.
        let poly = &p(&[-2, 0, 1]).pow(2) * &Polynomial::new(vec![ratio(-1, 3), int(1)]);
        let (_, prim) = poly.to_primitive();
        let r = largest_positive_root(&prim).unwrap();
        let iv = refine(
            &Polynomial::from_int_poly(&prim, &int(1)).squarefree_part().unwrap().to_primitive().1,
            &r.largest.unwrap(),
            &ratio(1, 1 << 20),
        );
        assert!(contains(&iv, 2f64.sqrt()));
    }

    #[test]
    fn bound_dominates_roots() {
        let poly = p(&[-1000, 0, 1]);
        let (_, prim) = poly.to_primitive();
        let k = root_bound_log2(&prim);
        assert!(2f64.powi(k as i32) > 1000f64.sqrt());
    }

    #[test]
    fn shift_round_trip() {
        // roots of x^2 - 3x above 1 -> shifted root at 2
        let prim = IntPoly::from_i64(&[0, -3, 1]);
        let s = shift_to_threshold(&prim, &int(1));
        let (_, core) = s.strip_x_power();
        let r = largest_positive_root(&core).unwrap().largest.unwrap();
        assert_eq!(unshift_interval(&r, &int(1)).exact, Some(int(3)));
        let a = ratio(1, 2);
        let s = shift_to_threshold(&prim, &a);
        let r = largest_positive_root(&s).unwrap().largest.unwrap();
        assert_eq!(unshift_interval(&r, &a).exact, Some(int(3)));
    }
}
