//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runtime budgets are enforced alongside correctness.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use darcais_core::arith::{ArithFn, ArithFnSpec};
use darcais_core::closed_forms::{laguerre_identity_holds, pochhammer_poly};
use darcais_core::darcais::{generate, nekrasov_okounkov_oracle, PolySequence};
use darcais_core::delta::{
    build_delta, closed_delta1, closed_delta2, delta2_criterion, delta2_criterion_from, delta2_ray_certificate,
    delta_sign_at, expected_leading_coefficient, largest_real_zero, verify_ray, RayClaim,
};
use darcais_core::rational::{int, parse_rational, ratio, signum, Rational};
use darcais_core::sequences::{
    colored_partitions, commuting_tuples, display_root, equivalence_property, log_concavity_scan,
    overpartitions, partitions, plane_partitions, root_comparison, root_decreasing_failures, IntegerSequence,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(kind: ArithFn) -> ArithFnSpec {
    ArithFnSpec::new(kind)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn tables() -> Outcome {
    let rows: [(u32, [i64; 11]); 3] = [
        (2, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]),
        (3, [1, 1, 4, 8, 21, 39, 92, 170, 360, 667, 1316]),
        (4, [1, 1, 8, 21, 84, 206, 717, 1810, 5462, 13859, 38497]),
    ];
    for (l, row) in rows {
        let got = commuting_tuples(l, 10).map_err(|e| e.to_string())?;
        ensure(got.values == ints(&row), || format!("N_{l} row differs: {:?}", got.values))?;
    }

    let table4: [(i64, [&str; 7]); 4] = [
        (-2, ["-2", "0", "0", "2", "0", "0", "0"]),
        (-1, ["-1", "-1/2", "-1/2", "3/8", "1/8", "3/16", "7/16"]),
        (1, ["1", "3/2", "5/2", "27/8", "39/8", "111/16", "149/16"]),
        (2, ["2", "4", "8", "14", "24", "40", "64"]),
    ];
    let seq = generate(&spec(ArithFn::GBar), 7);
    for (x, row) in table4 {
        for (i, cell) in row.iter().enumerate() {
            let n = i + 1;
            let want = parse_rational(cell).map_err(|e| e.to_string())?;
            let got = seq.value_at(n, &int(x)).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("P_{n}^gbar({x}) = {got}, expected {want}"))?;
        }
    }

    let pbar = overpartitions(4);
    ensure(pbar.values == ints(&[1, 2, 4, 8, 14]), || format!("pbar series {:?}", pbar.values))?;
    Ok("N_2..N_4 for n <= 10, P_n^gbar(-2,-1,1,2) for n <= 7, pbar 1,2,4,8,14".into())
}

fn root_displays() -> Outcome {
    let p = partitions(7);
    let table3 = ["1.00", "1.41", "1.44", "1.50", "1.48", "1.49", "1.47"];
    for (i, want) in table3.iter().enumerate() {
        let n = i + 1;
        let got = display_root(&p.values[n], n, 2);
        ensure(&got == want, || format!("p({n})^(1/{n}) shown as {got}, expected {want}"))?;
    }
    let pp = plane_partitions(10);
    let table2 = ["1", "1.732", "1.817", "1.899", "1.888", "1.906", "1.890", "1.886", "1.872", "1.862"];
    for (i, want) in table2.iter().enumerate() {
        let n = i + 1;
        let got = display_root(&pp.values[n], n, 3);
        // the table drops trailing zeros on 1
        let want = format!("{:.3}", want.parse::<f64>().unwrap());
        ensure(got == want, || format!("pp({n})^(1/{n}) shown as {got}, expected {want}"))?;
    }
    Ok("p(n)^(1/n) at 2 places for n <= 7, pp(n)^(1/n) at 3 places for n <= 10".into())
}

fn sun_monotonicity() -> Outcome {
    let p = partitions(501);
    let fails = root_decreasing_failures(&p, 6, 500).map_err(|e| e.to_string())?;
    ensure(fails.is_empty(), || format!("p fails at {fails:?}"))?;
    let fails5 = root_decreasing_failures(&p, 5, 5).map_err(|e| e.to_string())?;
    ensure(fails5 == [5], || "p(5)^6 > p(6)^5 unexpectedly".into())?;
    Ok("p(n)^(n+1) > p(n+1)^n for 6 <= n <= 500; fails at n = 5".into())
}

fn colored() -> Outcome {
    for k in 1..=10u64 {
        let seq = colored_partitions(k, 501).map_err(|e| e.to_string())?;
        // p_1 = p fails at n = 5 (see the previous criterion); the k = 1 case
        // of the inequality starts at n = 6.
        let from = if k == 1 { 6 } else { 5 };
        let fails = root_decreasing_failures(&seq, from, 500).map_err(|e| e.to_string())?;
        ensure(fails.is_empty(), || format!("p_{k} fails at {fails:?}"))?;
    }
    let p2 = colored_partitions(2, 2).map_err(|e| e.to_string())?;
    ensure(p2.values[1..] == ints(&[2, 5])[..], || format!("p_2 = {:?}", p2.values))?;
    ensure(
        root_comparison(&p2, 1).map_err(|e| e.to_string())? == std::cmp::Ordering::Less,
        || "k = 2, n = 1 should give 4 < 5".into(),
    )?;
    let p3 = colored_partitions(3, 2).map_err(|e| e.to_string())?;
    ensure(
        root_comparison(&p3, 1).map_err(|e| e.to_string())? == std::cmp::Ordering::Equal,
        || "k = 3, n = 1 should give 9 = 9".into(),
    )?;
    Ok("1 <= k <= 10 over 5 <= n <= 500 (k = 1 from n = 6); 4 < 5 at k=2, 9 = 9 at k=3".into())
}

fn plane_and_over() -> Outcome {
    let pp = plane_partitions(501);
    let fails = root_decreasing_failures(&pp, 6, 500).map_err(|e| e.to_string())?;
    ensure(fails.is_empty(), || format!("pp fails at {fails:?}"))?;
    let pbar = overpartitions(501);
    for n in [1, 2] {
        let ord = root_comparison(&pbar, n).map_err(|e| e.to_string())?;
        ensure(ord == std::cmp::Ordering::Equal, || format!("pbar at n = {n}: {ord:?}"))?;
    }
    let fails = root_decreasing_failures(&pbar, 3, 500).map_err(|e| e.to_string())?;
    ensure(fails.is_empty(), || format!("pbar fails at {fails:?}"))?;
    Ok("pp strict on 6..=500; pbar equal at n = 1, 2 and strict on 3..=500".into())
}

fn log_concavity() -> Outcome {
    let p = partitions(1001);
    let pp = plane_partitions(1001);
    let pbar = overpartitions(1001);
    let scans: [(&IntegerSequence, usize); 3] = [(&p, 26), (&pp, 12), (&pbar, 1)];
    for (seq, from) in scans {
        let fails = log_concavity_scan(seq, from, 1000).map_err(|e| e.to_string())?;
        ensure(fails.is_empty(), || format!("{} fails log-concavity at {fails:?}", seq.name))?;
    }
    let small = log_concavity_scan(&p, 2, 25).map_err(|e| e.to_string())?;
    ensure(!small.is_empty(), || "p shows no log-concavity failure on [2, 25]".into())?;
    Ok(format!("clean scans to 1000; p fails on [2, 25] at {small:?}"))
}

fn zeros() -> Outcome {
    let width = ratio(1, 1_000_000);
    let exact_cases: [(ArithFn, usize, i64); 5] = [
        (ArithFn::Sigma(1), 1, 3),
        (ArithFn::Psi(1), 1, 2),
        (ArithFn::Sigma(2), 1, 5),
        (ArithFn::GBar, 1, 2),
        (ArithFn::GBar, 2, 2),
    ];
    for (kind, n, want) in exact_cases {
        let seq = generate(&spec(kind), n + 1);
        let iv = largest_real_zero(&seq, n, &width).map_err(|e| e.to_string())?;
        ensure(iv.exact == Some(int(want)), || format!("x_{n}^{kind} = {iv:?}, expected {want}"))?;
    }

    let psi0 = generate(&spec(ArithFn::Psi(0)), 51);
    let bad: Vec<usize> = (1..=50usize)
        .into_par_iter()
        .filter(|&n| !matches!(largest_real_zero(&psi0, n, &width), Ok(iv) if iv.exact == Some(int(1))))
        .collect();
    ensure(bad.is_empty(), || format!("x_n^psi0 != 1 for n in {bad:?}"))?;

    let sigma = generate(&spec(ArithFn::Sigma(1)), 41);
    let bad: Vec<usize> = (6..=40usize)
        .into_par_iter()
        .filter(|&n| !matches!(verify_ray(&sigma, n, &RayClaim::from(int(1))), Ok((true, _))))
        .collect();
    ensure(bad.is_empty(), || format!("x_n^sigma < 1 not certified for {bad:?}"))?;
    Ok("exact zeros 3, 2, 5, 2, 2; x_n^psi0 = 1 for n <= 50; x_n^sigma < 1 for 6 <= n <= 40".into())
}

fn ray_range(kind: ArithFn, from: usize, to: usize) -> Result<(), String> {
    let seq = generate(&spec(kind), to + 1);
    let bad: Vec<usize> = (from..=to)
        .into_par_iter()
        .filter(|&n| !matches!(verify_ray(&seq, n, &RayClaim::from(int(1))), Ok((true, ref c)) if c.check_witness()))
        .collect();
    ensure(bad.is_empty(), || format!("Delta^{kind} not positive on [1, inf) for n in {bad:?}"))
}

fn rays_sigma2() -> Outcome {
    ray_range(ArithFn::Sigma(2), 6, 25)?;
    Ok("Delta_n^sigma2 > 0 on [1, inf) for 6 <= n <= 25".into())
}

fn rays_gell() -> Outcome {
    ray_range(ArithFn::GEll(3), 8, 25)?;
    ray_range(ArithFn::GEll(4), 8, 25)?;
    Ok("Delta_n^g3 and Delta_n^g4 > 0 on [1, inf) for 8 <= n <= 25".into())
}

fn identities() -> Outcome {
    let sigma = generate(&spec(ArithFn::Sigma(1)), 12);
    for n in 0..=12 {
        let oracle = nekrasov_okounkov_oracle(n).map_err(|e| e.to_string())?;
        ensure(sigma.poly(n).ok() == Some(&oracle), || format!("hook oracle differs at n = {n}"))?;
    }
    let psi0 = generate(&spec(ArithFn::Psi(0)), 50);
    let psi1 = generate(&spec(ArithFn::Psi(1)), 50);
    for n in 1..=50 {
        ensure(psi0.poly(n).ok() == Some(&pochhammer_poly(n)), || format!("Pochhammer differs at n = {n}"))?;
        ensure(laguerre_identity_holds(&psi1, n).unwrap_or(false), || format!("Laguerre differs at n = {n}"))?;
    }
    for kind in ArithFn::registered() {
        let g = spec(kind);
        let seq = generate(&g, 3);
        let d1 = build_delta(&seq, 1).map_err(|e| e.to_string())?.poly();
        let d2 = build_delta(&seq, 2).map_err(|e| e.to_string())?.poly();
        ensure(closed_delta1(&g) == d1, || format!("closed Delta_1 differs for {kind}"))?;
        ensure(closed_delta2(&g) == d2, || format!("closed Delta_2 differs for {kind}"))?;
        let cert = delta2_ray_certificate(&seq).map_err(|e| e.to_string())?;
        let nonneg = cert.is_certified() && cert.sign_at_threshold >= 0;
        ensure(nonneg == delta2_criterion(&g), || format!("Delta_2 lemma disagrees for {kind}"))?;
    }
    // the criterion must also fail where it should: g(3) > g(2)^2
    let seq = PolySequence::from_values("g3-large", &ints(&[0, 1, 2, 5]), 3).map_err(|e| e.to_string())?;
    let cert = delta2_ray_certificate(&seq).map_err(|e| e.to_string())?;
    let nonneg = cert.is_certified() && cert.sign_at_threshold >= 0;
    ensure(!nonneg && !delta2_criterion_from(&int(2), &int(5)), || "lemma should fail for g = (1, 2, 5)".into())?;
    Ok("hook oracle n <= 12, Pochhammer and Laguerre n <= 50, Delta_1/Delta_2 closed forms, Delta_2 lemma".into())
}

fn generated_sequences() -> Result<Vec<IntegerSequence>, String> {
    let mut out = vec![partitions(301), plane_partitions(301), overpartitions(301)];
    for k in 2..=10 {
        out.push(colored_partitions(k, 301).map_err(|e| e.to_string())?);
    }
    for l in 1..=4 {
        out.push(commuting_tuples(l, 301).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn properties() -> Outcome {
    let seqs = generated_sequences()?;
    let bad: Vec<String> = seqs
        .par_iter()
        .flat_map_iter(|s| {
            (1..=300)
                .filter(move |&n| !equivalence_property(s, n).unwrap_or(false))
                .map(move |n| format!("{}@{n}", s.name))
        })
        .collect();
    ensure(bad.is_empty(), || format!("equivalence fails: {bad:?}"))?;

    let kinds = ArithFn::registered();
    let bad: Vec<String> = kinds
        .par_iter()
        .flat_map_iter(|&kind| {
            let seq = generate(&spec(kind), 31);
            (1..=30usize).filter_map(move |n| {
                let d = build_delta(&seq, n).ok()?;
                let zero_ok = delta_sign_at(&seq, n, &Rational::from_integer(0.into())).ok() == Some(0);
                let lead = d.leading_coefficient();
                let lead_ok = signum(&lead) > 0 && lead == expected_leading_coefficient(n);
                (!(zero_ok && lead_ok)).then(|| format!("{kind}@{n}"))
            })
        })
        .collect();
    ensure(bad.is_empty(), || format!("Delta(0) or leading coefficient wrong: {bad:?}"))?;

    let bad: Vec<String> = kinds
        .par_iter()
        .flat_map_iter(|&kind| {
            let seq = generate(&spec(kind), 16);
            let mut rng = StdRng::seed_from_u64(0x5eed ^ kind.to_string().len() as u64);
            let mut failures = Vec::new();
            for n in 1..=15usize {
                let expanded = build_delta(&seq, n).expect("index in range").poly();
                for _ in 0..50 {
                    let x = ratio(rng.gen_range(-60..=60), rng.gen_range(1..=12));
                    let direct = delta_sign_at(&seq, n, &x).ok();
                    if direct != Some(signum(&expanded.eval(&x))) {
                        failures.push(format!("{kind}@{n} x={x}"));
                    }
                }
            }
            failures
        })
        .collect();
    ensure(bad.is_empty(), || format!("sign mismatch: {bad:?}"))?;
    Ok(format!(
        "equivalences on {} sequences to n = 300; Delta(0) = 0 and leading coefficient for n <= 30; 50 random signs per (g, n <= 15)",
        seqs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 table reproduction", Duration::from_secs(1), tables),
        ("2 root displays", Duration::from_secs(1), root_displays),
        ("3 Sun monotonicity", Duration::from_secs(30), sun_monotonicity),
        ("4 k-colored partitions", Duration::from_secs(120), colored),
        ("5 plane and overpartitions", Duration::from_secs(60), plane_and_over),
        ("6 log-concavity scans", Duration::from_secs(60), log_concavity),
        ("7 zero certification", Duration::from_secs(600), zeros),
        ("8a ray positivity sigma2", Duration::from_secs(600), rays_sigma2),
        ("8b ray positivity g3, g4", Duration::from_secs(600), rays_gell),
        ("9 identity suites", Duration::from_secs(120), identities),
        ("10 property suites", Duration::from_secs(600), properties),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; over budget ({budget:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name} [{:.2}s]: {msg}", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{:.2}s]: {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
