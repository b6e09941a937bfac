//! `verify <id>`: one id per theorem or conjecture, each producing a list of
//! checked instances with their certificates.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use darcais_core::arith::{ArithFn, ArithFnSpec};
use darcais_core::closed_forms::{laguerre_identity_holds, pochhammer_poly};
use darcais_core::darcais::{generate, PolySequence};
use darcais_core::delta::{delta2_criterion, delta2_ray_certificate, largest_real_zero, verify_ray, RayClaim, RayOutcome, RayPositivityCertificate};
use darcais_core::rational::int;
use darcais_core::sequences::{colored_partitions, overpartitions, partitions, plane_partitions, root_comparison, IntegerSequence};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{interval_json, rat_json, to_json, Format};

const DEFAULT_HORIZON: usize = 500;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyId {
    #[value(name = "sun-p")]
    SunP,
    #[value(name = "color-k")]
    ColorK,
    #[value(name = "plane")]
    Plane,
    #[value(name = "over")]
    Over,
    #[value(name = "sigma-zeros-lt-1")]
    SigmaZerosLt1,
    #[value(name = "sigma2-ray")]
    Sigma2Ray,
    #[value(name = "gell-ray")]
    GellRay,
    #[value(name = "pochhammer")]
    Pochhammer,
    #[value(name = "laguerre")]
    Laguerre,
    #[value(name = "delta2-lemma")]
    Delta2Lemma,
}

impl VerifyId {
    fn name(self) -> &'static str {
        match self {
            VerifyId::SunP => "sun-p",
            VerifyId::ColorK => "color-k",
            VerifyId::Plane => "plane",
            VerifyId::Over => "over",
            VerifyId::SigmaZerosLt1 => "sigma-zeros-lt-1",
            VerifyId::Sigma2Ray => "sigma2-ray",
            VerifyId::GellRay => "gell-ray",
            VerifyId::Pochhammer => "pochhammer",
            VerifyId::Laguerre => "laguerre",
            VerifyId::Delta2Lemma => "delta2-lemma",
        }
    }
}

pub struct Options {
    pub range: Option<RangeInclusive<usize>>,
    pub horizon: Option<usize>,
    pub k: Option<u64>,
    pub l: Option<u32>,
}

impl Options {
    /// The explicit range, or `start..=horizon` with the given default end.
    fn range(&self, start: usize, default_end: usize) -> Result<RangeInclusive<usize>, String> {
        let r = match &self.range {
            Some(r) => r.clone(),
            None => start..=self.horizon.unwrap_or(default_end),
        };
        if *r.start() == 0 {
            return Err("n must start at 1 or above".into());
        }
        if r.is_empty() {
            return Err(format!("empty range {}..{}", r.start(), r.end()));
        }
        Ok(r)
    }
}

pub struct Instance {
    pub n: usize,
    pub claim: String,
    pub result: bool,
    pub certificate: Value,
}

pub struct Report {
    pub id: &'static str,
    pub instances: Vec<Instance>,
    pub pass: bool,
}

impl Report {
    fn new(id: VerifyId, instances: Vec<Instance>) -> Self {
        let pass = instances.iter().all(|i| i.result);
        Self { id: id.name(), instances, pass }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let instances: Vec<Value> = self
                    .instances
                    .iter()
                    .map(|i| json!({ "n": i.n, "claim": i.claim, "result": i.result, "certificate": i.certificate }))
                    .collect();
                to_json(&json!({ "id": self.id, "instances": instances, "pass": self.pass }))
            }
            Format::Csv => {
                let mut out = String::from("n,claim,result,method\n");
                for i in &self.instances {
                    let method = i.certificate.get("method").and_then(Value::as_str).unwrap_or("");
                    out.push_str(&format!("{},\"{}\",{},{}\n", i.n, i.claim.replace('"', "'"), i.result, method));
                }
                out.push_str(&format!("# pass,{}\n", self.pass));
                out
            }
        }
    }
}

fn relation_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Greater => "greater",
        Ordering::Equal => "equal",
        Ordering::Less => "less",
    }
}

fn relation_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Greater => ">",
        Ordering::Equal => "=",
        Ordering::Less => "<",
    }
}

/// `a(n)^(n+1)` against `a(n+1)^n` for every n, expecting `expected(n)`.
fn comparisons(
    seq: &IntegerSequence,
    label: &str,
    range: RangeInclusive<usize>,
    expected: impl Fn(usize) -> Ordering + Sync,
) -> Result<Vec<Instance>, String> {
    let ns: Vec<usize> = range.collect();
    ns.par_iter()
        .map(|&n| {
            let want = expected(n);
            let got = root_comparison(seq, n).map_err(|e| e.to_string())?;
            Ok(Instance {
                n,
                claim: format!("{label}({n})^{} {} {label}({})^{n}", n + 1, relation_symbol(want), n + 1),
                result: got == want,
                certificate: json!({
                    "method": "integer-comparison",
                    "relation": relation_name(got),
                    "expected": relation_name(want),
                }),
            })
        })
        .collect()
}

fn ray_certificate_json(cert: &RayPositivityCertificate, inclusive: bool) -> Value {
    let witness = match &cert.outcome {
        RayOutcome::Certified => Value::Null,
        RayOutcome::Refuted { witness } => interval_json(witness),
    };
    json!({
        "method": cert.method.as_str(),
        "threshold": rat_json(&cert.threshold),
        "inclusive": inclusive,
        "sign_at_threshold": cert.sign_at_threshold,
        "sign_variations": cert.sign_variations,
        "nodes_examined": cert.nodes_examined,
        "shifted_degree": cert.shifted.degree(),
        "witness": witness,
        "witness_checked": cert.check_witness(),
    })
}

fn ray_instance(seq: &PolySequence, n: usize, claim: RayClaim, text: String) -> Result<Instance, String> {
    let (holds, cert) = verify_ray(seq, n, &claim).map_err(|e| e.to_string())?;
    Ok(Instance {
        n,
        claim: text,
        result: holds && cert.check_witness(),
        certificate: ray_certificate_json(&cert, claim.inclusive),
    })
}

fn rays(
    seq: &PolySequence,
    range: RangeInclusive<usize>,
    claim_for: impl Fn(usize) -> (RayClaim, String) + Sync,
) -> Result<Vec<Instance>, String> {
    let ns: Vec<usize> = range.collect();
    ns.par_iter()
        .map(|&n| {
            let (claim, text) = claim_for(n);
            ray_instance(seq, n, claim, text)
        })
        .collect()
}

fn spec(kind: ArithFn) -> ArithFnSpec {
    ArithFnSpec::new(kind)
}

fn ray_text(g: &str, n: usize, claim: &RayClaim) -> String {
    let bracket = if claim.inclusive { "[" } else { "(" };
    format!("Delta_{n}^{g}(x) > 0 for x in {bracket}{}, inf)", claim.threshold)
}

pub fn run(id: VerifyId, opts: &Options) -> Result<Report, String> {
    let instances = match id {
        VerifyId::SunP => {
            let range = opts.range(6, DEFAULT_HORIZON)?;
            comparisons(&partitions(range.end() + 1), "p", range, |_| Ordering::Greater)?
        }
        VerifyId::ColorK => {
            let ks: Vec<u64> = match opts.k {
                Some(k) => vec![k],
                None => (1..=10).collect(),
            };
            let mut all = Vec::new();
            for k in ks {
                // p_1 = p, whose inequality only starts at n = 6
                let range = opts.range(if k == 1 { 6 } else { 5 }, DEFAULT_HORIZON)?;
                let seq = colored_partitions(k, range.end() + 1).map_err(|e| e.to_string())?;
                let expected = move |n: usize| match (k, n) {
                    (2, 1) => Ordering::Less,
                    (3, 1) => Ordering::Equal,
                    _ => Ordering::Greater,
                };
                all.extend(comparisons(&seq, &format!("p_{k}"), range, expected)?);
            }
            all
        }
        VerifyId::Plane => {
            let range = opts.range(6, DEFAULT_HORIZON)?;
            comparisons(&plane_partitions(range.end() + 1), "pp", range, |_| Ordering::Greater)?
        }
        VerifyId::Over => {
            let range = opts.range(1, DEFAULT_HORIZON)?;
            let expected = |n: usize| if n <= 2 { Ordering::Equal } else { Ordering::Greater };
            comparisons(&overpartitions(range.end() + 1), "pbar", range, expected)?
        }
        VerifyId::SigmaZerosLt1 => {
            let range = opts.range(6, 40)?;
            let seq = generate(&spec(ArithFn::Sigma(1)), range.end() + 1);
            rays(&seq, range, |n| {
                let claim = RayClaim::from(int(1));
                let text = format!("x_{n}^sigma < 1: {}", ray_text("sigma", n, &claim));
                (claim, text)
            })?
        }
        VerifyId::Sigma2Ray => {
            let range = opts.range(1, 25)?;
            let seq = generate(&spec(ArithFn::Sigma(2)), range.end() + 1);
            rays(&seq, range, |n| {
                // Delta_1^sigma2 vanishes at 5, so below n = 6 the ray is open at 5
                let claim = if n >= 6 { RayClaim::from(int(1)) } else { RayClaim::beyond(int(5)) };
                let text = ray_text("sigma2", n, &claim);
                (claim, text)
            })?
        }
        VerifyId::GellRay => {
            let ls: Vec<u32> = match opts.l {
                Some(l) => vec![l],
                None => vec![3, 4],
            };
            let mut all = Vec::new();
            for l in ls {
                if l == 0 {
                    return Err("--l must be at least 1".into());
                }
                let range = opts.range(8, 25)?;
                let seq = generate(&spec(ArithFn::GEll(l)), range.end() + 1);
                let name = format!("g{l}");
                all.extend(rays(&seq, range, |n| {
                    let claim = RayClaim::from(int(1));
                    let text = ray_text(&name, n, &claim);
                    (claim, text)
                })?);
            }
            all
        }
        VerifyId::Pochhammer => {
            let range = opts.range(1, 50)?;
            let seq = generate(&spec(ArithFn::Psi(0)), range.end() + 1);
            let width = darcais_core::delta::default_width();
            let ns: Vec<usize> = range.collect();
            ns.par_iter()
                .map(|&n| {
                    let identity = seq.poly(n).map_err(|e| e.to_string())? == &pochhammer_poly(n);
                    let zero = largest_real_zero(&seq, n, &width).map_err(|e| e.to_string())?;
                    Ok(Instance {
                        n,
                        claim: format!("P_{n}^psi0 = x(x+1)...(x+{})/{n}! and x_{n}^psi0 = 1", n - 1),
                        result: identity && zero.exact == Some(int(1)),
                        certificate: json!({
                            "method": "exact-polynomial-identity+isolation",
                            "identity": identity,
                            "largest_zero": interval_json(&zero),
                        }),
                    })
                })
                .collect::<Result<Vec<_>, String>>()?
        }
        VerifyId::Laguerre => {
            let range = opts.range(1, 50)?;
            let seq = generate(&spec(ArithFn::Psi(1)), range.end() + 1);
            let ns: Vec<usize> = range.collect();
            ns.par_iter()
                .map(|&n| {
                    let identity = laguerre_identity_holds(&seq, n).map_err(|e| e.to_string())?;
                    // x_n <= 2 for all n, and x_n <= 1 from n = 6
                    let bound = if n >= 6 { 1 } else { 2 };
                    let claim = RayClaim::beyond(int(bound));
                    let ray = ray_instance(&seq, n, claim, String::new())?;
                    Ok(Instance {
                        n,
                        claim: format!("P_{n}^psi1 = (x/{n}) L_{}^(1)(-x) and x_{n}^psi1 <= {bound}", n - 1),
                        result: identity && ray.result,
                        certificate: json!({
                            "method": "exact-polynomial-identity+ray",
                            "identity": identity,
                            "ray": ray.certificate,
                        }),
                    })
                })
                .collect::<Result<Vec<_>, String>>()?
        }
        VerifyId::Delta2Lemma => ArithFn::registered()
            .into_par_iter()
            .map(|kind| {
                let g = spec(kind);
                let seq = generate(&g, 3);
                let cert = delta2_ray_certificate(&seq).map_err(|e| e.to_string())?;
                let nonneg = cert.is_certified() && cert.sign_at_threshold >= 0;
                let criterion = delta2_criterion(&g);
                let t = g.table(3);
                Ok(Instance {
                    n: 2,
                    claim: format!("{kind}: Delta_2 >= 0 on [g(2), inf) iff g(3) <= g(2)^2"),
                    result: nonneg == criterion,
                    certificate: json!({
                        "method": "criterion-vs-ray",
                        "g2": t[2].to_string(),
                        "g3": t[3].to_string(),
                        "criterion": criterion,
                        "nonnegative_from_g2": nonneg,
                        "ray": ray_certificate_json(&cert, true),
                    }),
                })
            })
            .collect::<Result<Vec<_>, String>>()?,
    };
    Ok(Report::new(id, instances))
}
