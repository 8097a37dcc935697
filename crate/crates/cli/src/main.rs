use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use simplex_ortho::jacobi1d::{shifted_jacobi, JacobiParams};
use simplex_ortho::ladder::ParamTuple;
use simplex_ortho::quadrature::{gram_matrix, gram_to_csv, tetra_rule, triangle_gram_matrix, triangle_rule};
use simplex_ortho::ratpoly::{fmt_rational, parse_rational};
use simplex_ortho::simplex3d::{connect_alpha, connect_general, simplex_poly, Index3, SimplexParams};
use simplex_ortho::suites::{parse_config, to_sorted_json, SuiteError, SuiteRegistry, SweepConfig};
use simplex_ortho::triangle2d::{triangle_poly, TriIndex, TriangleParams};
use simplex_ortho::Rational;

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 64;
const EXIT_CONFIG: u8 = 65;

const THREADS_ENV: &str = "SIMPLEX_ORTHO_THREADS";

#[derive(Parser)]
#[command(
    name = "simplex-ortho",
    version,
    about = "Exact checks for orthogonal polynomial families on the simplex"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Jacobi,
    Triangle,
    Simplex,
}

#[derive(Subcommand)]
enum Command {
    /// Print one family member with exact coefficients.
    PrintPoly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated degrees: `n`, `n,k` or `n1,n2,n3`.
        #[arg(long)]
        index: String,
        /// Comma-separated rationals such as `1/3,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Run verification suites from a sweep config.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// JSON sweep config; each suite's built-in runs when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Where to write the full JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Gram matrix of all members up to total degree N, as CSV.
    Gram {
        #[arg(long = "N")]
        n: u32,
        /// 4 values for the triangle, 6 for the tetrahedron.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connection expansion of one member onto other parameters.
    Connect {
        #[arg(long)]
        index: String,
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// `ξ` alone, or `φ,θ,η,ξ`.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Dump a collapsed quadrature rule as JSON.
    Rule {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        order: u32,
    },
}

/// An error carrying its exit code.
struct Exit(u8, String);

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>, Exit> {
    s.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| usage(format!("not a rational: `{}`", t.trim()))))
        .collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Exit> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("not an integer: `{}`", t.trim())))
        })
        .collect()
}

fn expect_len<T>(v: Vec<T>, n: usize, what: &str) -> Result<Vec<T>, Exit> {
    if v.len() == n {
        Ok(v)
    } else {
        Err(usage(format!("{what} needs {n} values, got {}", v.len())))
    }
}

fn index3(s: &str) -> Result<Index3, Exit> {
    let v = expect_len(parse_ints(s)?, 3, "--index")?;
    let idx = Index3::new(v[0], v[1], v[2]);
    if !idx.is_valid() {
        return Err(usage("indices must be nonnegative"));
    }
    Ok(idx)
}

fn simplex_params(s: &str) -> Result<SimplexParams, Exit> {
    let v = expect_len(parse_rationals(s)?, 6, "--params")?;
    let p = SimplexParams::from_slice(&v);
    p.validate().map_err(|e| usage(e.to_string()))?;
    Ok(p)
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<(), Exit> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Exit(EXIT_FAILURE, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_poly(family: FamilyArg, index: &str, params: &str) -> Result<u8, Exit> {
    let idx = parse_ints(index)?;
    if idx.iter().any(|&i| i < 0) {
        return Err(usage("indices must be nonnegative"));
    }
    let poly = match family {
        FamilyArg::Jacobi => {
            let v = expect_len(parse_rationals(params)?, 2, "--params")?;
            let n = expect_len(idx, 1, "--index")?[0];
            let p = JacobiParams::new(v[0].clone(), v[1].clone()).map_err(|e| usage(e.to_string()))?;
            shifted_jacobi(n, &p)
        }
        FamilyArg::Triangle => {
            let v = expect_len(parse_rationals(params)?, 4, "--params")?;
            let i = expect_len(idx, 2, "--index")?;
            let p = TriangleParams::from_slice(&v);
            p.validate().map_err(|e| usage(e.to_string()))?;
            let idx = TriIndex::new(i[0], i[1]);
            if !idx.is_valid() {
                return Err(usage("triangle index needs 0 <= k <= n"));
            }
            triangle_poly(idx, &p)
        }
        FamilyArg::Simplex => {
            let i = expect_len(idx, 3, "--index")?;
            simplex_poly(Index3::new(i[0], i[1], i[2]), &simplex_params(params)?)
        }
    };
    println!("{poly}");
    Ok(EXIT_OK)
}

fn configure_threads(config: &SweepConfig) -> Result<(), Exit> {
    let from_env = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("{THREADS_ENV} must be a positive integer")))?,
        ),
        Err(_) => None,
    };
    if let Some(n) = from_env.or(config.threads).filter(|&n| n > 0) {
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn verify(suite: Option<&str>, config: Option<&PathBuf>, out: Option<&PathBuf>, list: bool) -> Result<u8, Exit> {
    let reg = SuiteRegistry::default();
    if list {
        for name in reg.names() {
            println!(
                "{name:<14} {}",
                reg.get(name).map(|s| s.description()).unwrap_or_default()
            );
        }
        return Ok(EXIT_OK);
    }
    if let Some(name) = suite {
        if reg.get(name).is_none() {
            return Err(usage(format!(
                "unknown suite `{name}`; known: {}",
                reg.names().join(", ")
            )));
        }
    }
    let cfg = match config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Exit(EXIT_CONFIG, format!("{}: {e}", path.display())))?;
            parse_config(&text, suite).map_err(|e| Exit(EXIT_CONFIG, e.to_string()))?
        }
        None => match suite {
            Some(name) => SweepConfig {
                runs: reg.get(name).map(|s| s.default_config()).unwrap_or_default(),
                ..Default::default()
            },
            None => reg.default_config(),
        },
    };
    configure_threads(&cfg)?;
    let outcome = reg.run(&cfg, suite).map_err(|e| match e {
        SuiteError::UnknownSuite(_) => usage(e.to_string()),
        SuiteError::Arity { .. } | SuiteError::Config(_) => Exit(EXIT_CONFIG, e.to_string()),
    })?;
    if outcome.reports.is_empty() {
        return Err(Exit(EXIT_CONFIG, "config selects no runs".into()));
    }
    println!(
        "{:<14} {:<28} {:>7} {:>5} {:>5} {:>7}",
        "suite", "relation", "pass", "fail", "n/a", "errata"
    );
    for s in &outcome.summary {
        println!(
            "{:<14} {:<28} {:>7} {:>5} {:>5} {:>7}",
            s.suite.as_deref().unwrap_or("-"),
            s.relation,
            s.pass,
            s.fail,
            s.not_applicable,
            s.erratum_candidate
        );
    }
    let t = outcome.totals;
    println!(
        "total: {} pass, {} fail, {} not applicable, {} erratum candidates",
        t.pass, t.fail, t.not_applicable, t.erratum_candidate
    );
    if let Some(path) = out.cloned().or(cfg.output.map(PathBuf::from)) {
        write_or_print(Some(&path), &to_sorted_json(&outcome))?;
    }
    Ok(outcome.exit_code())
}

fn gram(n: u32, params: &str, out: Option<&PathBuf>) -> Result<u8, Exit> {
    let v = parse_rationals(params)?;
    let g = match v.len() {
        4 => {
            let p = TriangleParams::from_slice(&v);
            p.validate().map_err(|e| usage(e.to_string()))?;
            let rule = triangle_rule(&p, 2 * n).map_err(|e| usage(e.to_string()))?;
            triangle_gram_matrix(n, &p, &rule)
        }
        6 => {
            let p = simplex_params(params)?;
            let rule = tetra_rule(&p, 2 * n).map_err(|e| usage(e.to_string()))?;
            gram_matrix(n, &p, &rule)
        }
        k => return Err(usage(format!("--params needs 4 or 6 values, got {k}"))),
    };
    write_or_print(out, &gram_to_csv(&g))?;
    Ok(EXIT_OK)
}

fn connect(index: &str, params: &str, target: &str) -> Result<u8, Exit> {
    let idx = index3(index)?;
    let p = simplex_params(params)?;
    let t = parse_rationals(target)?;
    let (relation, ex) = match t.len() {
        1 => ("connect.alpha", connect_alpha(idx, &p, &t[0])),
        4 => (
            "connect.general",
            connect_general(idx, &p, [t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone()]),
        ),
        k => return Err(usage(format!("--target needs 1 or 4 values, got {k}"))),
    };
    let ex = ex.map_err(|e| Exit(EXIT_FAILURE, e.to_string()))?;
    let report = ex.verify(relation);
    let strs = |v: Vec<Rational>| v.iter().map(fmt_rational).collect::<Vec<_>>();
    let terms: Vec<_> = ex
        .terms
        .iter()
        .map(|t| {
            json!({
                "index": t.index.to_vec(),
                "coeff": fmt_rational(&t.coeff),
                "one_minus_x": t.one_minus_x,
                "one_minus_xy": t.one_minus_xy,
            })
        })
        .collect();
    let doc = json!({
        "index": idx.to_vec(),
        "params": strs(p.to_vec()),
        "target": strs(ex.target.to_vec()),
        "terms": terms,
        "status": report.status,
    });
    print!("{}", to_sorted_json(&doc));
    Ok(if report.is_pass() { EXIT_OK } else { EXIT_FAILURE })
}

fn rule(params: &str, order: u32) -> Result<u8, Exit> {
    let v = parse_rationals(params)?;
    let text = match v.len() {
        4 => {
            let p = TriangleParams::from_slice(&v);
            p.validate().map_err(|e| usage(e.to_string()))?;
            to_sorted_json(&triangle_rule(&p, order).map_err(|e| usage(e.to_string()))?)
        }
        6 => to_sorted_json(&tetra_rule(&simplex_params(params)?, order).map_err(|e| usage(e.to_string()))?),
        k => return Err(usage(format!("--params needs 4 or 6 values, got {k}"))),
    };
    print!("{text}");
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::PrintPoly { family, index, params } => print_poly(*family, index, params),
        Command::Verify {
            suite,
            config,
            out,
            list,
        } => verify(suite.as_deref(), config.as_ref(), out.as_ref(), *list),
        Command::Gram { n, params, out } => gram(*n, params, out.as_ref()),
        Command::Connect { index, params, target } => connect(index, params, target),
        Command::Rule { params, order } => rule(params, *order),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
