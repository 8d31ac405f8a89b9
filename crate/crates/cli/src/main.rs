//! `cabled`: exact calculator for concordance invariants of two-strand
//! cables. Every command either prints a report (text, or line-delimited
//! JSON with `--json`) or exits with a typed error: 2 for parse errors,
//! 3 for constraint violations, 4 for verification failures, 1 for io.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cabled_core::invariants::{
    bound_gap_witness, casson_plus_one, d1_cable_two_strand, fox_milnor_check, report_all,
    tau_cable_two_strand, FullReport, InvariantError, InvariantReport, ReportValue, PROV_CASSON,
};
use cabled_core::knots::{KnotError, KnotExpr};
use cabled_core::lattice::{cable_d1_certificate, IntLattice, LatticeError};
use cabled_core::sympoly::PolyError;
use cabled_core::verify::{run_suite, suite_names, DEFAULT_SEED};
use cabled_core::CableSign;

#[derive(Parser)]
#[command(
    name = "cabled",
    version,
    about = "Exact calculator for concordance invariants of two-strand cables",
    max_term_width = 100
)]
struct Cli {
    /// Emit line-delimited JSON records instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Alexander polynomial of a knot expression
    Alexander {
        /// Knot expression, e.g. "cable2(5; K(1))"
        expr: String,
    },
    /// Every invariant the calculator knows for the expression
    Invariants {
        expr: String,
        /// Assert that the expression admits a lens-space surgery at this
        /// slope and apply the surgery formula for d1
        #[arg(long, value_name = "SLOPE")]
        assume_lens: Option<i64>,
    },
    /// Casson invariant of +1-surgery on the expression
    Casson { expr: String },
    /// tau of the expression, or of its two-strand cable with --q
    Tau {
        expr: String,
        /// Cable parameter (odd); the expression is taken as the companion
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// d1 of the expression, or of its two-strand cable with --q
    D1 {
        expr: String,
        /// Cable parameter (odd); the expression is taken as the companion
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// Build a knot with |d1| = a and 2|tau| = b (even 0 <= b < a)
    Witness {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// First index of the twist-knot companions
        #[arg(long)]
        n: i64,
    },
    /// Fox-Milnor factorization test on the Alexander polynomial
    FoxMilnor {
        expr: String,
        /// Optional second expression; the test then runs on the connected sum
        second: Option<String>,
    },
    /// Integral symmetric forms: definiteness, signature, bounds
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Replay the deterministic check suites
    Verify {
        /// One of: sympoly, prop-prop, casson, witness, lattice, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized property checks (decimal or 0x-hex)
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
    },
    /// Parse an expression and print its canonical form
    ParseCheck { text: String },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Sign type of the form (negative definite, indefinite, ...)
    Definiteness(MatrixSource),
    /// Numbers of positive and negative squares over the rationals
    Signature(MatrixSource),
    /// Whether every diagonal entry is even
    Even(MatrixSource),
    /// Whether a vector v satisfies (Lv)_i = L_ii mod 2 for all i
    Characteristic {
        #[command(flatten)]
        src: MatrixSource,
        /// Comma-separated integer entries
        #[arg(long, value_name = "V", allow_hyphen_values = true)]
        vector: String,
    },
    /// Correction-term lower bound certified by the form
    Dbound {
        #[command(flatten)]
        src: MatrixSource,
        /// Half-width of the search box around each parity class
        #[arg(long, default_value_t = 3)]
        radius: u32,
        /// Largest rank accepted for the search
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Two-sided d1 certificate for the two-strand cable at q = 4k +- 1
    Certificate {
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
    },
}

/// Where a matrix comes from: a file, an inline literal, or stdin.
#[derive(Args)]
#[group(multiple = false)]
struct MatrixSource {
    /// File with the rank on the first line, then the entries row by row
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
    /// Inline matrix like "[[-2,1],[1,-2]]"
    #[arg(long, value_name = "M", allow_hyphen_values = true)]
    matrix: Option<String>,
}

impl MatrixSource {
    fn load(&self) -> Result<IntLattice, CliError> {
        let text = match (&self.file, &self.matrix) {
            (Some(path), _) => fs::read_to_string(path)?,
            (None, Some(inline)) => inline.clone(),
            (None, None) => std::io::read_to_string(std::io::stdin())?,
        };
        Ok(IntLattice::parse(&text)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    /// q = 4k + 1
    Plus,
    /// q = 4k - 1
    Minus,
}

impl From<SignArg> for CableSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => CableSign::Plus,
            SignArg::Minus => CableSign::Minus,
        }
    }
}

fn parse_seed(text: &str) -> Result<u64, String> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

struct CliError {
    code: u8,
    message: String,
}

impl From<KnotError> for CliError {
    fn from(e: KnotError) -> Self {
        let code = match &e {
            KnotError::Parse { .. } => 2,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        let code = match &e {
            PolyError::Parse { .. } => 2,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        let code = match &e {
            LatticeError::Parse { .. } => 2,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Knot(inner) => inner.into(),
            other => CliError { code: 3, message: other.to_string() },
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: 1, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Alexander { expr } => {
            let knot = KnotExpr::parse(&expr)?;
            let delta = knot.alexander();
            if json {
                println!(
                    "{}",
                    json!({
                        "expr": knot.to_string(),
                        "tbasis": delta.to_tbasis_string(),
                        "monomial": delta.to_monomial_string(),
                    })
                );
            } else {
                println!("alexander(T-basis): {}", delta.to_tbasis_string());
                println!("alexander(monomial): {}", delta.to_monomial_string());
            }
        }
        Cmd::Invariants { expr, assume_lens } => {
            let knot = KnotExpr::parse(&expr)?;
            let full = report_all(&knot, assume_lens)?;
            if json {
                for r in &full.reports {
                    emit_report(true, r);
                }
            } else {
                println!("{full}");
            }
        }
        Cmd::Casson { expr } => {
            let knot = KnotExpr::parse(&expr)?;
            let value = casson_plus_one(&knot)?;
            let report = InvariantReport {
                name: "casson_plus_one".to_string(),
                value: ReportValue::Exact { value },
                provenance: PROV_CASSON.to_string(),
            };
            emit_report(json, &report);
        }
        Cmd::Tau { expr, q } => {
            let knot = KnotExpr::parse(&expr)?;
            let report = match q {
                Some(q) => tau_cable_two_strand(&knot, q)?,
                None => named_row(&report_all(&knot, None)?, "tau"),
            };
            emit_report(json, &report);
        }
        Cmd::D1 { expr, q } => {
            let knot = KnotExpr::parse(&expr)?;
            let report = match q {
                Some(q) => d1_cable_two_strand(&knot, q)?,
                None => named_row(&report_all(&knot, None)?, "d1"),
            };
            emit_report(json, &report);
        }
        Cmd::Witness { a, b, n } => {
            let w = bound_gap_witness(a, b, n)?;
            if json {
                println!("{}", json!({ "expr": w.expr.to_string() }));
                emit_report(true, &w.d1);
                emit_report(true, &w.tau);
            } else {
                println!("{w}");
            }
        }
        Cmd::FoxMilnor { expr, second } => {
            let mut knot = KnotExpr::parse(&expr)?;
            if let Some(text) = second {
                knot = KnotExpr::sum(vec![knot, KnotExpr::parse(&text)?])?;
            }
            let delta = knot.alexander();
            let status = fox_milnor_check(&delta)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "name": "fox_milnor",
                        "status": status,
                        "detail": status.to_string(),
                    })
                );
            } else {
                println!("alexander(T-basis): {}", delta.to_tbasis_string());
                println!("fox-milnor: {status}");
            }
        }
        Cmd::Lattice(sub) => run_lattice(json, sub)?,
        Cmd::Verify { suite, seed } => {
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let Some(report) = run_suite(&suite, seed) else {
                return Err(CliError {
                    code: 3,
                    message: format!(
                        "unknown suite '{}'; expected one of: {}",
                        suite,
                        suite_names().join(", ")
                    ),
                });
            };
            if json {
                for c in &report.checks {
                    println!(
                        "{}",
                        json!({
                            "id": c.id,
                            "ok": c.passed(),
                            "provenance": c.provenance,
                            "message": c.outcome.as_ref().err(),
                        })
                    );
                }
                println!(
                    "{}",
                    json!({
                        "suite": report.suite,
                        "seed": report.seed,
                        "passed": report.passed(),
                        "total": report.checks.len(),
                    })
                );
            } else {
                println!("{report}");
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(4));
            }
        }
        Cmd::ParseCheck { text } => {
            let knot = KnotExpr::parse(&text)?;
            if json {
                println!("{}", json!({ "input": text, "canonical": knot.to_string() }));
            } else {
                println!("{knot}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_lattice(json: bool, cmd: LatticeCmd) -> Result<(), CliError> {
    match cmd {
        LatticeCmd::Definiteness(src) => {
            let l = src.load()?;
            let d = l.definiteness();
            if json {
                println!("{}", json!({ "definiteness": d.to_string() }));
            } else {
                println!("definiteness: {d}");
            }
        }
        LatticeCmd::Signature(src) => {
            let l = src.load()?;
            let (pos, neg, sig) = l.signature()?;
            if json {
                println!(
                    "{}",
                    json!({ "positive": pos, "negative": neg, "signature": sig })
                );
            } else {
                println!("signature: {pos} positive, {neg} negative, sigma = {sig}");
            }
        }
        LatticeCmd::Even(src) => {
            let l = src.load()?;
            let even = l.is_even();
            if json {
                println!("{}", json!({ "even": even }));
            } else {
                println!("even: {even}");
            }
        }
        LatticeCmd::Characteristic { src, vector } => {
            let l = src.load()?;
            let v = parse_vector(&vector)?;
            let ch = l.is_characteristic(&v)?;
            if json {
                println!("{}", json!({ "characteristic": ch }));
            } else {
                println!("characteristic: {ch}");
            }
        }
        LatticeCmd::Dbound { src, radius, max_rank } => {
            let l = src.load()?;
            let db = l.d_lower_bound(radius, max_rank)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "numerator": db.numerator.to_string(),
                        "bound": db.bound.to_string(),
                        "attained": db.attained,
                        "interior": db.interior,
                    })
                );
            } else {
                println!("{db}");
            }
        }
        LatticeCmd::Certificate { k, sign } => {
            let cert = cable_d1_certificate(k, sign.into())?;
            if json {
                println!(
                    "{}",
                    json!({ "q": cert.q, "upper": cert.upper, "lower": cert.lower })
                );
            } else {
                println!("{cert}");
            }
        }
    }
    Ok(())
}

fn parse_vector(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|e| CliError {
                code: 2,
                message: format!("vector entry '{}': {}", part.trim(), e),
            })
        })
        .collect()
}

fn named_row(full: &FullReport, name: &str) -> InvariantReport {
    full.reports
        .iter()
        .find(|r| r.name == name)
        .cloned()
        .unwrap_or_else(|| InvariantReport {
            name: name.to_string(),
            value: ReportValue::Unknown,
            provenance: "no applicable formula".to_string(),
        })
}

fn emit_report(json: bool, report: &InvariantReport) {
    if json {
        println!("{}", serde_json::to_string(report).expect("reports serialize"));
    } else {
        println!("{report}");
    }
}
