use darcais_core::arith::{eval_sigma, ArithFn, ArithFnSpec};
use darcais_core::closed_forms::{laguerre_identity_check, pi_n_poly, pochhammer_poly};
use darcais_core::darcais::generate;
use darcais_core::delta::{build_delta, delta_sign_at, expected_leading_coefficient, verify_positive_beyond};
use darcais_core::rational::{int, ratio, Rational};
use darcais_core::sequences::{
    colored_partitions, colored_partitions_via_polynomials, display_root, overpartitions, partitions,
    plane_partitions,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn spec(kind: ArithFn) -> ArithFnSpec {
    ArithFnSpec::new(kind)
}

#[test]
fn arithmetic_functions_are_normalized_and_positive() {
    for kind in ArithFn::registered() {
        let g = spec(kind);
        let t = g.table(300);
        assert!(t[1].is_one(), "{kind}");
        assert!(t[1..].iter().all(|v| v >= &BigInt::one()), "{kind}");
    }
}

#[test]
fn gbar_against_sigma() {
    let gbar = spec(ArithFn::GBar).table(2000);
    for n in 1..=2000u64 {
        let s = eval_sigma(1, n).unwrap();
        if n % 2 == 1 {
            assert_eq!(gbar[n as usize], s, "n = {n}");
        } else {
            assert!(gbar[n as usize] < s, "n = {n}");
        }
    }
}

#[test]
fn polynomial_shape() {
    for kind in ArithFn::registered() {
        let seq = generate(&spec(kind), 60);
        let mut fact = BigInt::one();
        for n in 0..=60usize {
            if n > 0 {
                fact *= n;
            }
            let p = seq.poly(n).unwrap();
            assert_eq!(p.degree(), Some(n), "{kind} n={n}");
            assert!(p.coeffs().last().is_some_and(|c| !c.is_zero()));
            assert_eq!(p.leading(), Some(&Rational::new(BigInt::one(), fact.clone())));
            if n >= 1 {
                assert!(p.coeff(0).is_zero());
            }
            for c in p.coeffs() {
                assert!(!c.is_negative(), "{kind} n={n}");
                let scaled = c * Rational::from_integer(fact.clone());
                assert!(scaled.is_integer(), "{kind} n={n}");
            }
        }
    }
}

#[test]
fn special_values_tie_to_sequences() {
    let n = 200;
    let one = int(1);
    let sigma = generate(&spec(ArithFn::Sigma(1)), n);
    let p = partitions(n);
    let pp = plane_partitions(n);
    let pbar = overpartitions(n);
    let sigma2 = generate(&spec(ArithFn::Sigma(2)), n);
    let gbar = generate(&spec(ArithFn::GBar), n);
    for i in 0..=n {
        assert_eq!(sigma.value_at(i, &one).unwrap(), Rational::from_integer(p.values[i].clone()));
        assert_eq!(sigma2.value_at(i, &one).unwrap(), Rational::from_integer(pp.values[i].clone()));
        assert_eq!(gbar.value_at(i, &int(2)).unwrap(), Rational::from_integer(pbar.values[i].clone()));
    }
    for k in 1..=10 {
        assert_eq!(
            colored_partitions(k, n).unwrap().values,
            colored_partitions_via_polynomials(k, n).unwrap().values,
            "k = {k}"
        );
    }
}

#[test]
fn leading_coefficient_law() {
    for kind in ArithFn::registered() {
        let seq = generate(&spec(kind), 41);
        for n in 1..=40 {
            let d = build_delta(&seq, n).unwrap();
            let lead = d.leading_coefficient();
            assert_eq!(lead, expected_leading_coefficient(n), "{kind} n={n}");
            assert!(lead.is_positive());
        }
    }
}

#[test]
fn positive_beyond_certificate_matches_sampled_signs() {
    let mut rng = StdRng::seed_from_u64(17);
    for kind in ArithFn::registered() {
        let seq = generate(&spec(kind), 13);
        for n in 1..=12 {
            let g2 = Rational::from_integer(seq.g(2).unwrap().clone());
            let cert = verify_positive_beyond(&seq, n, &g2).unwrap();
            if !cert.is_certified() {
                continue;
            }
            for _ in 0..20 {
                let x = &g2 + ratio(rng.gen_range(1..=400), rng.gen_range(1..=40));
                assert_eq!(delta_sign_at(&seq, n, &x).unwrap(), 1, "{kind} n={n} x={x}");
            }
        }
    }
}

#[test]
fn pochhammer_and_laguerre_closed_forms() {
    let psi0 = generate(&spec(ArithFn::Psi(0)), 50);
    for n in 0..=50 {
        assert_eq!(psi0.poly(n).unwrap(), &pochhammer_poly(n), "n = {n}");
    }
    for n in 1..=50 {
        assert!(laguerre_identity_check(n).unwrap(), "n = {n}");
    }
}

#[test]
fn pi_n_positive_above_one() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in 1..=25 {
        let pi = pi_n_poly(n).unwrap();
        for _ in 0..20 {
            let x = int(1) + ratio(rng.gen_range(1..=500), rng.gen_range(1..=50));
            assert!(pi.eval(&x).is_positive(), "n={n} x={x}");
        }
    }
}

#[test]
fn pochhammer_delta_factorization() {
    let seq = generate(&spec(ArithFn::Psi(0)), 21);
    for n in 1..=20 {
        let delta = build_delta(&seq, n).unwrap().poly();
        let expected = &pochhammer_poly(n).pow(n as u32) * &pi_n_poly(n).unwrap();
        assert_eq!(delta, expected, "n = {n}");
    }
}

#[test]
fn roots_of_p_approach_one() {
    let p = partitions(500);
    let shown: Vec<f64> = [10, 100, 500]
        .iter()
        .map(|&n| display_root(&p.values[n], n, 6).parse().unwrap())
        .collect();
    assert!(shown[0] > shown[1] && shown[1] > shown[2] && shown[2] > 1.0, "{shown:?}");
}
