//! Single-binary command-line interface: parses gain-graph or arrangement
//! documents, runs the counting engines by method, emits one JSON object
//! per invocation, and cross-checks every method against brute force.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error,
//! 3 resource-limit error.

mod document;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use affinograph::chromatic::{
    balanced_chromatic_polynomial, integral_chromatic_dc, integral_terms, modular_chromatic,
    modular_substitution_rule, region_count, TermSum,
};
use affinograph::families::FamilySpec;
use affinograph::flats::DEFAULT_MAX_FLATS;
use affinograph::geometry::{oracle_integral, oracle_interval, oracle_modular, DEFAULT_MAX_POINTS};
use affinograph::Error as CoreError;

use document::{GraphDocument, ParsedGraph};

#[derive(Parser)]
#[command(
    name = "affinograph",
    version,
    about = "Exact counting for integral gain graphs and affinographic hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph document path; standard input when omitted or "-".
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct LimitArgs {
    /// Maximum number of flats to enumerate before giving up (exit 3).
    #[arg(long, default_value_t = DEFAULT_MAX_FLATS)]
    limit_flats: usize,
    /// Maximum number of points an oracle may visit (exit 3).
    #[arg(long, default_value_t = DEFAULT_MAX_POINTS)]
    limit_points: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IntegralMethod {
    /// Möbius inversion over the flat semilattice.
    Mobius,
    /// Deletion–contraction recursion.
    Dc,
    /// Brute-force enumeration.
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModularMethod {
    /// Flats of the mod-m reduction (ground truth).
    Flats,
    /// The loop-gain substitution rule, printed next to the flats value.
    Paper,
    /// Brute-force enumeration.
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    #[value(name = "interval-Kn", alias = "interval-kn")]
    IntervalKn,
    Shi,
    #[value(name = "ext-shi")]
    ExtShi,
    Linial,
}

#[derive(Subcommand)]
enum Command {
    /// Count proper colorations with colors in 1..=m.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[command(flatten)]
        input: InputArgs,
        /// Upper end of the color range.
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value_t = IntegralMethod::Mobius)]
        method: IntegralMethod,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print the piecewise-polynomial terms of the integral count.
    Pieces {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print the characteristic (balanced chromatic) polynomial.
    Charpoly {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print the number of regions the arrangement cuts.
    Regions {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Count proper colorations with colors in the integers mod m.
    #[command(allow_negative_numbers = true)]
    Modular {
        #[command(flatten)]
        input: InputArgs,
        /// The modulus (at least 1).
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value_t = ModularMethod::Flats)]
        method: ModularMethod,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Emit a named family as a graph document, or its closed-form count.
    #[command(allow_negative_numbers = true)]
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        /// Number of vertices.
        #[arg(long)]
        n: u32,
        /// Lower gain bound (interval-Kn).
        #[arg(long)]
        a: Option<i64>,
        /// Upper gain bound (interval-Kn).
        #[arg(long)]
        b: Option<i64>,
        /// Extension parameter (ext-shi).
        #[arg(long)]
        s: Option<u32>,
        /// Evaluate the closed form at m instead of emitting the graph.
        #[arg(long)]
        m: Option<i64>,
    },
    /// Cross-check all counting methods for every m up to a bound.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Largest color bound checked.
        #[arg(long)]
        m_max: i64,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::FlatLimitExceeded(_) | CoreError::PointBudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct EvalOut {
    m: i64,
    count: String,
}

#[derive(Serialize)]
struct TermOut {
    sign: i8,
    mu: serde_json::Value,
    roots: Vec<i64>,
}

#[derive(Serialize)]
struct PiecesOut {
    n: usize,
    terms: Vec<TermOut>,
}

#[derive(Serialize)]
struct CharpolyOut {
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct RegionsOut {
    regions: String,
}

#[derive(Serialize)]
struct ModularOut {
    m: i64,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    paper_rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct FamilyGraphOut {
    n: usize,
    edges: Vec<[i64; 3]>,
}

#[derive(Serialize)]
struct VerifyFailureOut {
    check: String,
    m: i64,
    expected: String,
    actual: String,
}

#[derive(Serialize)]
struct VerifyOut {
    ok: bool,
    failures: Vec<VerifyFailureOut>,
}

fn read_document(input: &InputArgs) -> Result<ParsedGraph, Failure> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
            text
        }
    };
    let document = GraphDocument::parse(&text).map_err(Failure::input)?;
    document.build().map_err(Failure::input)
}

fn emit<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("output serializes");
    line.push('\n');
    line
}

fn mu_value(mu: &BigInt) -> serde_json::Value {
    match u64::try_from(mu) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::from(mu.to_string()),
    }
}

fn pieces_out(terms: &TermSum) -> PiecesOut {
    PiecesOut {
        n: terms.n(),
        terms: terms
            .terms()
            .iter()
            .map(|t| TermOut {
                sign: t.sign,
                mu: mu_value(&t.mu),
                roots: t.roots.clone(),
            })
            .collect(),
    }
}

fn require_unrooted(parsed: &ParsedGraph, what: &str) -> Result<(), Failure> {
    if parsed.bounds().is_some() {
        return Err(Failure::input(format!(
            "{what} requires an unrooted graph document"
        )));
    }
    Ok(())
}

fn family_spec(
    name: FamilyName,
    n: u32,
    a: Option<i64>,
    b: Option<i64>,
    s: Option<u32>,
) -> Result<FamilySpec, Failure> {
    if n < 1 {
        return Err(Failure::input("--n must be at least 1"));
    }
    match name {
        FamilyName::Shi => Ok(FamilySpec::shi(n)),
        FamilyName::Linial => Ok(FamilySpec::linial(n)),
        FamilyName::ExtShi => {
            let s = s.ok_or_else(|| Failure::input("ext-shi requires --s"))?;
            if s < 1 {
                return Err(Failure::input("--s must be at least 1"));
            }
            Ok(FamilySpec::ext_shi(n, s))
        }
        FamilyName::IntervalKn => {
            let a = a.ok_or_else(|| Failure::input("interval-Kn requires --a"))?;
            let b = b.ok_or_else(|| Failure::input("interval-Kn requires --b"))?;
            Ok(FamilySpec::interval(n, a, b))
        }
    }
}

fn record_failure(
    failures: &mut Vec<VerifyFailureOut>,
    check: &str,
    m: i64,
    expected: &BigInt,
    actual: &BigInt,
) {
    if expected != actual && !failures.iter().any(|f| f.check == check) {
        failures.push(VerifyFailureOut {
            check: check.to_string(),
            m,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

/// Runs one subcommand, returning the stdout payload and the exit code.
fn run(command: Command) -> Result<(String, u8), Failure> {
    match command {
        Command::Eval {
            input,
            m,
            method,
            limits,
        } => {
            let parsed = read_document(&input)?;
            let count = match (method, &parsed) {
                (IntegralMethod::Mobius, _) => {
                    integral_terms(&parsed.rooted(), limits.limit_flats)?.eval(m)
                }
                (IntegralMethod::Dc, _) => integral_chromatic_dc(&parsed.rooted(), m),
                (IntegralMethod::Oracle, ParsedGraph::Unrooted(g)) => {
                    oracle_integral(g, m, limits.limit_points)?
                }
                (IntegralMethod::Oracle, ParsedGraph::Rooted(r)) => {
                    oracle_interval(r.graph(), r.bounds(), m, limits.limit_points)?
                }
            };
            Ok((
                emit(&EvalOut {
                    m,
                    count: count.to_string(),
                }),
                0,
            ))
        }
        Command::Pieces { input, limits } => {
            let parsed = read_document(&input)?;
            let terms = integral_terms(&parsed.rooted(), limits.limit_flats)?;
            Ok((emit(&pieces_out(&terms)), 0))
        }
        Command::Charpoly { input, limits } => {
            let parsed = read_document(&input)?;
            require_unrooted(&parsed, "charpoly")?;
            let poly = balanced_chromatic_polynomial(parsed.graph(), limits.limit_flats)?;
            let coefficients = poly.coeffs().iter().map(|c| c.to_string()).collect();
            Ok((emit(&CharpolyOut { coefficients }), 0))
        }
        Command::Regions { input, limits } => {
            let parsed = read_document(&input)?;
            require_unrooted(&parsed, "regions")?;
            let regions = region_count(parsed.graph(), limits.limit_flats)?;
            Ok((
                emit(&RegionsOut {
                    regions: regions.to_string(),
                }),
                0,
            ))
        }
        Command::Modular {
            input,
            m,
            method,
            limits,
        } => {
            let parsed = read_document(&input)?;
            require_unrooted(&parsed, "modular")?;
            let graph = parsed.graph();
            let out = match method {
                ModularMethod::Flats => {
                    let count = modular_chromatic(graph, m, limits.limit_flats)?;
                    ModularOut {
                        m,
                        count: count.to_string(),
                        paper_rule: None,
                        agrees: None,
                    }
                }
                ModularMethod::Oracle => {
                    let count = oracle_modular(graph, m, limits.limit_points)?;
                    ModularOut {
                        m,
                        count: count.to_string(),
                        paper_rule: None,
                        agrees: None,
                    }
                }
                ModularMethod::Paper => {
                    let count = modular_chromatic(graph, m, limits.limit_flats)?;
                    let rule = modular_substitution_rule(graph, m, limits.limit_flats)?;
                    ModularOut {
                        m,
                        count: count.to_string(),
                        agrees: Some(count == rule),
                        paper_rule: Some(rule.to_string()),
                    }
                }
            };
            Ok((emit(&out), 0))
        }
        Command::Family {
            name,
            n,
            a,
            b,
            s,
            m,
        } => {
            let spec = family_spec(name, n, a, b, s)?;
            match m {
                Some(m) => {
                    let count = spec.closed_form(m)?;
                    Ok((
                        emit(&EvalOut {
                            m,
                            count: count.to_string(),
                        }),
                        0,
                    ))
                }
                None => {
                    let graph = spec.graph()?;
                    let edges = graph
                        .edges()
                        .iter()
                        .map(|e| [e.tail as i64, e.head as i64, e.gain])
                        .collect();
                    Ok((
                        emit(&FamilyGraphOut {
                            n: graph.n(),
                            edges,
                        }),
                        0,
                    ))
                }
            }
        }
        Command::Verify {
            input,
            m_max,
            limits,
        } => {
            let parsed = read_document(&input)?;
            let rooted = parsed.rooted();
            let terms = integral_terms(&rooted, limits.limit_flats)?;
            let mut failures: Vec<VerifyFailureOut> = Vec::new();
            for m in 0..=m_max {
                let mobius = terms.eval(m);
                let dc = integral_chromatic_dc(&rooted, m);
                record_failure(&mut failures, "dc", m, &mobius, &dc);
                let oracle = match &parsed {
                    ParsedGraph::Unrooted(g) => oracle_integral(g, m, limits.limit_points)?,
                    ParsedGraph::Rooted(r) => {
                        oracle_interval(r.graph(), r.bounds(), m, limits.limit_points)?
                    }
                };
                record_failure(&mut failures, "oracle", m, &mobius, &oracle);
            }
            if parsed.bounds().is_none() {
                for m in 1..=m_max {
                    let flats = modular_chromatic(parsed.graph(), m, limits.limit_flats)?;
                    let oracle = oracle_modular(parsed.graph(), m, limits.limit_points)?;
                    record_failure(&mut failures, "modular-oracle", m, &flats, &oracle);
                }
            }
            let ok = failures.is_empty();
            let payload = emit(&VerifyOut { ok, failures });
            Ok((payload, if ok { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
