use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use darcais_core::arith::ArithFnSpec;
use darcais_core::darcais::generate;
use darcais_core::delta::{build_delta, largest_zero_of};
use darcais_core::rational::{parse_rational, to_decimal_string};
use darcais_core::roots::IsolatingInterval;
use darcais_core::sequences::{by_name, display_root};
use darcais_core::Rational;
use rayon::prelude::*;
use serde_json::{json, Value};

mod verify;

#[derive(Parser, Debug)]
#[command(name = "darcais", version, about = "Exact D'Arcais polynomials, difference polynomials and their largest zeros")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for per-n scans (default: available parallelism).
    #[arg(long, env = "DARCAIS_THREADS", global = true)]
    threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of P_0..P_N, or their values at --x.
    Poly {
        #[arg(long)]
        g: String,
        #[arg(long = "N")]
        n: usize,
        /// Evaluation point, e.g. 2, -1/2 or 0.125.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Certified largest real zeros of Delta_n for n in a range.
    Zeros {
        #[arg(long)]
        g: String,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: String,
        #[arg(long, default_value = "1/1000000")]
        width: String,
        /// Rows with n above this are skipped instead of expanded.
        #[arg(long, default_value_t = 60)]
        max_n: usize,
    },
    /// Check a theorem or conjecture over a range of n.
    Verify {
        id: verify::VerifyId,
        #[arg(long)]
        range: Option<String>,
        /// Upper end of the default range.
        #[arg(long)]
        horizon: Option<usize>,
        /// Number of colors for color-k (default: every k in 1..=10).
        #[arg(long)]
        k: Option<u64>,
        /// l for gell-ray (default: 3 and 4).
        #[arg(long)]
        l: Option<u32>,
    },
    /// Integer sequence table: p, pk:<k>, pp, pbar or Nell:<l>.
    Seq {
        name: String,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 3)]
        root_decimals: usize,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub(crate) fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("range must look like a..b, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

pub(crate) fn rat_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub(crate) fn interval_json(iv: &IsolatingInterval) -> Value {
    json!({
        "lo": rat_json(&iv.lo),
        "hi": rat_json(&iv.hi),
        "exact": iv.exact.as_ref().map(rat_json),
    })
}

fn parse_g(s: &str) -> CliResult<ArithFnSpec> {
    s.parse::<ArithFnSpec>().map_err(|e| usage(e.to_string()))
}

fn csv_line(cells: &[String]) -> String {
    let mut line = cells.join(",");
    line.push('\n');
    line
}

fn cmd_poly(g: &str, n: usize, x: Option<&str>, format: Format) -> CliResult<String> {
    let g = parse_g(g)?;
    let x = x.map(parse_rational).transpose().map_err(|e| usage(e.to_string()))?;
    let seq = generate(&g, n);
    let mut out = String::new();
    match (x, format) {
        (Some(x), Format::Csv) => {
            out.push_str("n,value\n");
            for (i, v) in seq.value_table(&x).iter().enumerate() {
                out.push_str(&csv_line(&[i.to_string(), v.to_string()]));
            }
        }
        (Some(x), Format::Json) => {
            let rows: Vec<Value> = seq
                .value_table(&x)
                .iter()
                .enumerate()
                .map(|(i, v)| json!({ "n": i, "value": rat_json(v) }))
                .collect();
            out = to_json(&json!({ "g": g.to_string(), "x": rat_json(&x), "values": rows }));
        }
        (None, Format::Csv) => {
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..=n).map(|i| format!("coeff{i}")))
                .collect();
            out.push_str(&csv_line(&header));
            for (i, p) in seq.polys().iter().enumerate() {
                let mut cells = vec![i.to_string()];
                cells.extend(p.coeffs().iter().map(|c| c.to_string()));
                out.push_str(&csv_line(&cells));
            }
        }
        (None, Format::Json) => {
            let rows: Vec<Value> = seq
                .polys()
                .iter()
                .enumerate()
                .map(|(i, p)| json!({ "n": i, "coeffs": p.coeffs().iter().map(rat_json).collect::<Vec<_>>() }))
                .collect();
            out = to_json(&json!({ "g": g.to_string(), "polys": rows }));
        }
    }
    Ok(out)
}

struct ZeroRow {
    n: usize,
    interval: Option<IsolatingInterval>,
    status: String,
}

fn cmd_zeros(g: &str, range: &str, width: &str, max_n: usize, format: Format) -> CliResult<String> {
    let g = parse_g(g)?;
    let range = parse_range(range).map_err(usage)?;
    let width = parse_rational(width).map_err(|e| usage(e.to_string()))?;
    if width <= Rational::from_integer(0.into()) {
        return Err(usage("--width must be positive"));
    }
    if *range.start() == 0 {
        return Err(usage("Delta_n needs n >= 1"));
    }
    let top = (*range.end()).min(max_n);
    let seq = generate(&g, top + 1);
    let ns: Vec<usize> = range.collect();
    let mut rows: Vec<ZeroRow> = ns
        .par_iter()
        .map(|&n| {
            if n > max_n {
                return ZeroRow { n, interval: None, status: "skipped: degree too large".into() };
            }
            let found = build_delta(&seq, n).and_then(|d| largest_zero_of(&d, &width));
            match found {
                Ok(iv) => {
                    let status = if iv.is_exact() { "exact" } else { "isolated" };
                    ZeroRow { n, interval: Some(iv), status: status.into() }
                }
                Err(e) => ZeroRow { n, interval: None, status: format!("error: {e}") },
            }
        })
        .collect();
    rows.sort_by_key(|r| r.n);

    let approx = |iv: &IsolatingInterval| to_decimal_string(&iv.midpoint(), 8);
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("n,lo,hi,exact,approx,status\n");
            for r in &rows {
                let cells = match &r.interval {
                    Some(iv) => vec![
                        r.n.to_string(),
                        iv.lo.to_string(),
                        iv.hi.to_string(),
                        iv.exact.as_ref().map(|e| e.to_string()).unwrap_or_default(),
                        approx(iv),
                        r.status.clone(),
                    ],
                    None => vec![r.n.to_string(), String::new(), String::new(), String::new(), String::new(), r.status.clone()],
                };
                out.push_str(&csv_line(&cells));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "interval": r.interval.as_ref().map(interval_json),
                        "approx": r.interval.as_ref().map(approx),
                        "status": r.status,
                    })
                })
                .collect();
            to_json(&json!({ "g": g.to_string(), "width": rat_json(&width), "zeros": rows }))
        }
    })
}

fn cmd_seq(name: &str, n: usize, decimals: usize, format: Format) -> CliResult<String> {
    let seq = by_name(name, n).map_err(|e| usage(e.to_string()))?;
    let roots: Vec<String> = seq.values.iter().enumerate().map(|(i, v)| display_root(v, i, decimals)).collect();
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("n,value,root\n");
            for (i, v) in seq.values.iter().enumerate() {
                out.push_str(&csv_line(&[i.to_string(), v.to_string(), roots[i].clone()]));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = seq
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| json!({ "n": i, "value": v.to_string(), "root": roots[i] }))
                .collect();
            to_json(&json!({ "name": seq.name, "values": rows }))
        }
    })
}

pub(crate) fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(text: &str, path: Option<&PathBuf>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(Failure::Io),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(Failure::Io)
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    if let Some(t) = cli.common.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let format = cli.common.format;
    let (text, pass) = match &cli.command {
        Command::Poly { g, n, x } => (cmd_poly(g, *n, x.as_deref(), format)?, true),
        Command::Zeros { g, range, width, max_n } => (cmd_zeros(g, range, width, *max_n, format)?, true),
        Command::Seq { name, n, root_decimals } => (cmd_seq(name, *n, *root_decimals, format)?, true),
        Command::Verify { id, range, horizon, k, l } => {
            let opts = verify::Options {
                range: range.as_deref().map(parse_range).transpose().map_err(usage)?,
                horizon: *horizon,
                k: *k,
                l: *l,
            };
            let report = verify::run(*id, &opts).map_err(usage)?;
            (report.render(format), report.pass)
        }
    };
    emit(&text, cli.common.output.as_ref())?;
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
