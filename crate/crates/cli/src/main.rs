//! Command-line surface: construction, Gram matrices, sampling grids,
//! verification reports, and projection, as batch commands with CSV/JSON
//! output.
//!
//! Exit codes: 0 success, 1 verification failure within hypothesis,
//! 2 usage or domain error.

mod verify;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use chebtri::bernstein::{de_casteljau, BaryPoint};
use chebtri::exact::Rational;
use chebtri::simplex::coeffs_closed_form;
use chebtri::weighted::{gram_matrix, GramData, GramMode};

/// Degree cap for the exact commands; kept well inside the range where
/// exact construction stays interactive.
const MAX_DEGREE: u32 = 20;

#[derive(Parser)]
#[command(
    name = "chebtri",
    version,
    about = "Chebyshev-weighted orthogonal polynomials on the triangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernstein-Bezier coefficients of T_{n,r}.
    Coeffs {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All pairwise weighted inner products among {T_{m,r} : r <= m <= n}.
    Gram {
        #[arg(long)]
        n: u32,
        /// Weight exponent; integer or p/q selects the exact oracle, a
        /// decimal (e.g. 0.5) selects quadrature.
        #[arg(long)]
        gamma: String,
        /// Nodes per direction for the quadrature path.
        #[arg(long, default_value_t = 16)]
        nodes: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample T_{n,r} on a barycentric lattice for plotting.
    EvalGrid {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Points per triangle edge (>= 2).
        #[arg(long)]
        resolution: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exact verification suite up to degree n and emit a JSON report.
    Verify {
        #[arg(long)]
        n: u32,
        /// Non-negative integer weight exponent (exact mode only).
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Project a named function onto the orthogonal family (JSON output).
    Project {
        #[arg(long)]
        n: u32,
        /// Weight exponent, >= 1.
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long, default_value_t = 20)]
        nodes: usize,
        /// One of: exp_u, sin_pi_v, uvw, cheb:M,R
        #[arg(long)]
        function: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Coeffs { n, r, format, out } => {
            check_indices(n, r)?;
            let poly = coeffs_closed_form(n, r).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("i,j,k,value\n");
                    for (zeta, value) in poly.bb.iter() {
                        writeln!(s, "{},{},{},{}", zeta.i, zeta.j, zeta.k, value)
                            .expect("string write");
                    }
                    s
                }
                Format::Json => pretty_json(&poly.bb)?,
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::Gram {
            n,
            gamma,
            nodes,
            format,
            out,
        } => {
            check_degree(n)?;
            let (gamma_rat, mode) = parse_gamma_mode(&gamma, nodes)?;
            let matrix = gram_matrix(n, &gamma_rat, mode).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Csv => matrix.to_csv().map_err(|e| e.to_string())?,
                Format::Json => gram_json(&matrix)?,
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::EvalGrid {
            n,
            r,
            resolution,
            format,
            out,
        } => {
            check_indices(n, r)?;
            if resolution < 2 {
                return Err(format!("resolution must be at least 2, got {resolution}"));
            }
            let text = eval_grid(n, r, resolution, format)?;
            emit(out, &text)?;
            Ok(0)
        }
        Command::Verify { n, gamma, out } => {
            check_degree(n)?;
            let gamma_rat: Rational = gamma
                .parse()
                .map_err(|_| format!("gamma must be a non-negative integer, got {gamma:?}"))?;
            let g = gamma_rat
                .to_u32()
                .ok_or_else(|| format!("gamma must be a non-negative integer, got {gamma:?}"))?;
            let report = verify::run_suite(n, g).map_err(|e| e.to_string())?;
            let text = pretty_json(&report)?;
            emit(out, &text)?;
            Ok(if report.all_pass { 0 } else { 1 })
        }
        Command::Project {
            n,
            gamma,
            nodes,
            function,
            out,
        } => {
            check_degree(n)?;
            let gamma_f = parse_gamma_f64(&gamma)?;
            let f = named_function(&function)?;
            let result =
                chebtri::project(move |pt| f(pt), n, gamma_f, nodes).map_err(|e| e.to_string())?;
            let text = pretty_json(&result)?;
            emit(out, &text)?;
            Ok(0)
        }
    }
}

fn check_degree(n: u32) -> Result<(), String> {
    if n > MAX_DEGREE {
        return Err(format!(
            "degree n={n} is above the supported exact range (max {MAX_DEGREE})"
        ));
    }
    Ok(())
}

fn check_indices(n: u32, r: u32) -> Result<(), String> {
    check_degree(n)?;
    if r > n {
        return Err(format!("r={r} exceeds n={n}"));
    }
    Ok(())
}

/// Integer or `p/q` syntax selects the exact oracle; decimals go to
/// quadrature.
fn parse_gamma_mode(s: &str, nodes: usize) -> Result<(Rational, GramMode), String> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        let g: f64 = s.parse().map_err(|_| format!("invalid gamma: {s:?}"))?;
        if g.is_nan() || g <= -1.0 {
            return Err(format!("gamma must be > -1, got {s}"));
        }
        // Carried only for reporting; entries come from quadrature.
        let approx = Rational::ratio((g * 1_000_000.0).round() as i64, 1_000_000);
        Ok((approx, GramMode::Quadrature { nodes }))
    } else {
        let g: Rational = s.parse().map_err(|e| format!("invalid gamma {s:?}: {e}"))?;
        Ok((g, GramMode::Exact))
    }
}

fn parse_gamma_f64(s: &str) -> Result<f64, String> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        s.parse().map_err(|_| format!("invalid gamma: {s:?}"))
    } else {
        let g: Rational = s.parse().map_err(|e| format!("invalid gamma {s:?}: {e}"))?;
        g.to_f64().map_err(|e| e.to_string())
    }
}

type Evaluator = Box<dyn Fn(&BaryPoint) -> f64>;

fn named_function(name: &str) -> Result<Evaluator, String> {
    match name {
        "exp_u" => Ok(Box::new(|pt: &BaryPoint| pt.u().exp())),
        "sin_pi_v" => Ok(Box::new(|pt: &BaryPoint| {
            (std::f64::consts::PI * pt.v()).sin()
        })),
        "uvw" => Ok(Box::new(|pt: &BaryPoint| pt.u() * pt.v() * pt.w())),
        other => {
            if let Some(spec) = other.strip_prefix("cheb:") {
                let (m, r) = spec
                    .split_once(',')
                    .ok_or_else(|| format!("expected cheb:M,R, got {other:?}"))?;
                let m: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad degree in {other:?}"))?;
                let r: u32 = r
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad order in {other:?}"))?;
                check_indices(m, r)?;
                let poly = coeffs_closed_form(m, r).map_err(|e| e.to_string())?;
                let coeffs = poly.bb.coeffs_f64().map_err(|e| e.to_string())?;
                Ok(Box::new(move |pt: &BaryPoint| de_casteljau(m, &coeffs, pt)))
            } else {
                Err(format!(
                    "unknown function {other:?}; expected exp_u, sin_pi_v, uvw or cheb:M,R"
                ))
            }
        }
    }
}

fn eval_grid(n: u32, r: u32, resolution: u32, format: Format) -> Result<String, String> {
    let poly = coeffs_closed_form(n, r).map_err(|e| e.to_string())?;
    let coeffs = poly.bb.coeffs_f64().map_err(|e| e.to_string())?;
    let denom = (resolution - 1) as f64;
    let rows: Vec<(f64, f64, f64, f64)> = chebtri::bernstein::tri_indices(resolution - 1)
        .map(|zeta| {
            let (u, v, w) = (
                zeta.i as f64 / denom,
                zeta.j as f64 / denom,
                zeta.k as f64 / denom,
            );
            let pt = BaryPoint::new(u, v, w).expect("lattice point");
            (u, v, w, de_casteljau(n, &coeffs, &pt))
        })
        .collect();
    match format {
        Format::Csv => {
            let mut s = String::from("u,v,w,value\n");
            for (u, v, w, value) in rows {
                writeln!(s, "{u},{v},{w},{value}").expect("string write");
            }
            Ok(s)
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Row {
                u: f64,
                v: f64,
                w: f64,
                value: f64,
            }
            let rows: Vec<Row> = rows
                .into_iter()
                .map(|(u, v, w, value)| Row { u, v, w, value })
                .collect();
            pretty_json(&rows)
        }
    }
}

fn gram_json(matrix: &chebtri::GramMatrix) -> Result<String, String> {
    #[derive(serde::Serialize)]
    struct Entry {
        m: u32,
        r: u32,
        m2: u32,
        s: u32,
        #[serde(skip_serializing_if = "Option::is_none")]
        rat: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pi: Option<String>,
        value: f64,
    }
    #[derive(serde::Serialize)]
    struct Doc {
        degree: u32,
        gamma: String,
        mode: &'static str,
        entries: Vec<Entry>,
    }
    let dim = matrix.dim();
    let mut entries = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let (m, r) = matrix.basis()[a];
            let (m2, s) = matrix.basis()[b];
            let (rat, pi) = match matrix.data() {
                GramData::Exact(_) => {
                    let e = matrix.entry_exact(a, b).expect("exact mode");
                    (Some(e.rat_part.to_string()), Some(e.pi_part.to_string()))
                }
                GramData::Quadrature(_) => (None, None),
            };
            let value = matrix.entry_f64(a, b).map_err(|e| e.to_string())?;
            entries.push(Entry {
                m,
                r,
                m2,
                s,
                rat,
                pi,
                value,
            });
        }
    }
    let doc = Doc {
        degree: matrix.degree(),
        gamma: matrix.gamma().to_string(),
        mode: match matrix.data() {
            GramData::Exact(_) => "exact",
            GramData::Quadrature(_) => "quadrature",
        },
        entries,
    };
    pretty_json(&doc)
}

fn pretty_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}
