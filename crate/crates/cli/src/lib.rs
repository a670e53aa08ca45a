//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error,
//! 3 enumeration bound exceeded. Machine output goes to `out`, diagnostics to
//! `err`, so [`run`] is testable without a process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use eulerian::classical::{self, ConstructionMethod};
use eulerian::general::{self, Progression};
use eulerian::oracle::{self, DEFAULT_BOUND, SLOW_BOUND};
use eulerian::qeulerian::{self, DEFAULT_Q_BOUND, SLOW_Q_BOUND};
use eulerian::verify::{self, Limits, Report, Status, Suite};
use eulerian::{Error, Poly, Rat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eulerian", version, about = "Exact Eulerian numbers, polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a triangle of Eulerian numbers.
    Triangle(TriangleArgs),
    /// Print a single Eulerian polynomial.
    Poly(PolyArgs),
    /// Sum of n-th powers of the first m terms of a progression.
    Powersum(PowersumArgs),
    /// Same as `triangle --kind q`.
    Qtriangle(QTriangleArgs),
    /// Run the identity checks and report PASS/FAIL per parameter point.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Classical,
    General,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TriangleMethod {
    Recurrence,
    Closed,
    Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyMethod {
    Triangle,
    Recursion,
    Derivative,
    Classical,
}

#[derive(Args, Debug)]
struct ProgressionArgs {
    /// First term of the progression.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rat>,
    /// Common difference of the progression.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<Rat>,
}

impl ProgressionArgs {
    fn progression(&self) -> Progression {
        Progression::new(
            self.a.clone().unwrap_or_else(Rat::one),
            self.d.clone().unwrap_or_else(Rat::one),
        )
    }
}

#[derive(Args, Debug)]
struct TriangleArgs {
    #[arg(long, value_enum, default_value = "classical")]
    kind: Kind,
    #[command(flatten)]
    prog: ProgressionArgs,
    #[arg(long = "max-n", default_value_t = 5)]
    max_n: usize,
    /// With --k, print the single entry A(n,k) instead of the triangle.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    k: Option<i64>,
    /// Substitute this value for q (q kind only).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rat>,
    #[arg(long, value_enum, default_value = "recurrence")]
    method: TriangleMethod,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Raise the enumeration bounds to 10 (permutations) and 7 (q).
    #[arg(long)]
    slow: bool,
}

#[derive(Args, Debug)]
struct QTriangleArgs {
    #[arg(long = "max-n", default_value_t = 5)]
    max_n: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rat>,
    #[arg(long, value_enum, default_value = "recurrence")]
    method: TriangleMethod,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long)]
    slow: bool,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_enum, default_value = "classical")]
    kind: Kind,
    #[command(flatten)]
    prog: ProgressionArgs,
    #[arg(long)]
    n: usize,
    /// Construction route; `classical` builds a general polynomial from the
    /// classical ones.
    #[arg(long, value_enum, default_value = "triangle")]
    method: PolyMethod,
    /// Evaluate at this t instead of printing coefficients.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rat>,
    /// Substitute this value for q (q kind only).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rat>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args, Debug)]
struct PowersumArgs {
    #[command(flatten)]
    prog: ProgressionArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: u64,
    /// Weight term i by t^i.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rat>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: usize,
    #[arg(long = "max-m", default_value_t = 10)]
    max_m: u64,
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Check a single progression instead of the default grid (needs --a and --d).
    #[command(flatten)]
    prog: ProgressionArgs,
    #[arg(long)]
    slow: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Serialized form of every computed object. Field order is fixed; absent
/// fields are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub kind: Kind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Rat>,
    pub rows: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Scalars(Vec<Vec<Rat>>),
    Polys(Vec<Vec<Vec<Rat>>>),
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Triangle(args) => triangle(args, out),
        Command::Qtriangle(args) => triangle(
            TriangleArgs {
                kind: Kind::Q,
                prog: ProgressionArgs { a: None, d: None },
                max_n: args.max_n,
                n: args.n,
                k: args.k,
                x: args.x,
                method: args.method,
                format: args.format,
                slow: args.slow,
            },
            out,
        ),
        Command::Poly(args) => poly(args, out),
        Command::Powersum(args) => powersum(args, out, err),
        Command::Verify(args) => verify_cmd(args, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
        Err(Failure::Verification) => EXIT_FAILED,
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn emit(doc: &OutputDocument, format: Format, out: &mut dyn Write) -> Outcome {
    let text = match format {
        Format::Json => format!("{}\n", doc.to_json()),
        Format::Csv => render_rows(&doc.rows, ","),
        Format::Plain => render_rows(&doc.rows, " "),
    };
    out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))
}

fn join(values: &[Rat], sep: &str) -> String {
    values.iter().map(Rat::to_string).collect::<Vec<_>>().join(sep)
}

fn render_rows(rows: &Payload, sep: &str) -> String {
    let mut s = String::new();
    match rows {
        Payload::Scalars(rows) => {
            for row in rows {
                s.push_str(&join(row, sep));
                s.push('\n');
            }
        }
        Payload::Polys(rows) => {
            // Entries are coefficient lists; in CSV each becomes a
            // space-separated cell, in plain text entries are split by " | ".
            let (inner, outer) = if sep == "," { (" ", ",") } else { (" ", " | ") };
            for row in rows {
                let cells: Vec<String> = row.iter().map(|p| join(p, inner)).collect();
                s.push_str(&cells.join(outer));
                s.push('\n');
            }
        }
    }
    s
}

fn bounds(slow: bool) -> (usize, usize) {
    if slow {
        (SLOW_BOUND, SLOW_Q_BOUND)
    } else {
        (DEFAULT_BOUND, DEFAULT_Q_BOUND)
    }
}

fn check_progression_flags(kind: Kind, prog: &ProgressionArgs) -> Outcome {
    if kind != Kind::General && (prog.a.is_some() || prog.d.is_some()) {
        return Err(usage("--a/--d only apply to --kind general"));
    }
    Ok(())
}

fn classical_row(n: usize, method: TriangleMethod, bound: usize) -> Result<Vec<Rat>, Failure> {
    Ok(match method {
        TriangleMethod::Recurrence => classical::classical_triangle(n).row(n).iter().map(Rat::from).collect(),
        TriangleMethod::Closed => (0..n as i64)
            .map(|k| Rat::from(classical::classical_number_closed(n, k)))
            .collect(),
        TriangleMethod::Enumeration => oracle::eulerian_by_enumeration(n, bound)?
            .into_iter()
            .map(|c| Rat::from(c as i64))
            .collect(),
    })
}

fn general_row(n: usize, prog: &Progression, method: TriangleMethod) -> Result<Vec<Rat>, Failure> {
    match method {
        TriangleMethod::Recurrence => Ok(general::general_triangle(prog, n).row(n).to_vec()),
        TriangleMethod::Closed => Ok((-1..n as i64)
            .map(|k| general::general_number_closed(n, k, prog))
            .collect()),
        TriangleMethod::Enumeration => Err(usage("general numbers have no enumeration route")),
    }
}

fn q_row(n: usize, method: TriangleMethod, bound: usize) -> Result<Vec<Poly>, Failure> {
    match method {
        TriangleMethod::Recurrence => Ok(qeulerian::q_triangle(n)?.row(n).to_vec()),
        TriangleMethod::Enumeration => Ok(qeulerian::q_combinatorial_row(n, bound)?),
        TriangleMethod::Closed => Err(usage("q numbers have no closed-form route")),
    }
}

fn q_rows_payload(rows: Vec<Vec<Poly>>, x: &Option<Rat>) -> Payload {
    match x {
        Some(x) => Payload::Scalars(rows.iter().map(|r| r.iter().map(|p| p.eval(x)).collect()).collect()),
        None => Payload::Polys(
            rows.into_iter()
                .map(|r| r.into_iter().map(Poly::into_coeffs).collect())
                .collect(),
        ),
    }
}

fn triangle(args: TriangleArgs, out: &mut dyn Write) -> Outcome {
    check_progression_flags(args.kind, &args.prog)?;
    if args.x.is_some() && args.kind != Kind::Q {
        return Err(usage("--x only applies to --kind q"));
    }
    let (bound, q_bound) = bounds(args.slow);
    let prog = args.prog.progression();
    let general_fields = |kind: Kind| {
        if kind == Kind::General {
            (Some(prog.a.clone()), Some(prog.d.clone()))
        } else {
            (None, None)
        }
    };

    if let (Some(n), Some(k)) = (args.n, args.k) {
        let value = match args.kind {
            Kind::Classical => match args.method {
                TriangleMethod::Closed => Rat::from(classical::classical_number_closed(n, k)),
                _ => {
                    let row = if n == 0 { Vec::new() } else { classical_row(n, args.method, bound)? };
                    usize::try_from(k).ok().and_then(|k| row.get(k).cloned()).unwrap_or_else(Rat::zero)
                }
            },
            Kind::General => match args.method {
                TriangleMethod::Closed => general::general_number_closed(n, k, &prog),
                _ => general::general_triangle(&prog, n).get(n, k),
            },
            Kind::Q => {
                if n == 0 {
                    return Err(usage("q numbers start at n = 1"));
                }
                let row = q_row(n, args.method, q_bound)?;
                let p = usize::try_from(k).ok().and_then(|k| row.get(k).cloned()).unwrap_or_else(|| Poly::zero(eulerian::Var::Q));
                let (a, d) = general_fields(args.kind);
                let doc = OutputDocument {
                    kind: Kind::Q,
                    n,
                    a,
                    d,
                    rows: q_rows_payload(vec![vec![p]], &args.x),
                };
                return emit(&doc, args.format, out);
            }
        };
        let (a, d) = general_fields(args.kind);
        let doc = OutputDocument {
            kind: args.kind,
            n,
            a,
            d,
            rows: Payload::Scalars(vec![vec![value]]),
        };
        return emit(&doc, args.format, out);
    }
    if args.k.is_some() {
        return Err(usage("--k needs --n"));
    }

    let max_n = args.n.unwrap_or(args.max_n);
    let rows = match args.kind {
        Kind::Classical => {
            let rows = (1..=max_n)
                .map(|n| classical_row(n, args.method, bound))
                .collect::<Result<Vec<_>, _>>()?;
            Payload::Scalars(rows)
        }
        Kind::General => Payload::Scalars(
            (0..=max_n)
                .map(|n| general_row(n, &prog, args.method))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Kind::Q => {
            let rows = (1..=max_n)
                .map(|n| q_row(n, args.method, q_bound))
                .collect::<Result<Vec<_>, _>>()?;
            q_rows_payload(rows, &args.x)
        }
    };
    let (a, d) = general_fields(args.kind);
    let doc = OutputDocument {
        kind: args.kind,
        n: max_n,
        a,
        d,
        rows,
    };
    emit(&doc, args.format, out)
}

fn poly(args: PolyArgs, out: &mut dyn Write) -> Outcome {
    check_progression_flags(args.kind, &args.prog)?;
    if args.x.is_some() && args.kind != Kind::Q {
        return Err(usage("--x only applies to --kind q"));
    }
    let prog = args.prog.progression();
    let (a, d) = match args.kind {
        Kind::General => (Some(prog.a.clone()), Some(prog.d.clone())),
        _ => (None, None),
    };
    let t_poly = match (args.kind, args.method) {
        (Kind::Classical, PolyMethod::Triangle) => Some(classical::classical_poly(args.n, ConstructionMethod::Triangle)),
        (Kind::Classical, PolyMethod::Recursion) => Some(classical::classical_poly(args.n, ConstructionMethod::Recursion)),
        (Kind::Classical, PolyMethod::Derivative) => Some(classical::classical_poly(args.n, ConstructionMethod::Derivative)),
        (Kind::General, PolyMethod::Triangle) => Some(general::general_poly(args.n, &prog)),
        (Kind::General, PolyMethod::Classical) => Some(general::general_poly_via_classical(args.n, &prog)),
        (Kind::Q, PolyMethod::Triangle) => None,
        (kind, method) => {
            return Err(usage(format!("method {method:?} is not available for kind {kind:?}")));
        }
    };
    let poly = match t_poly {
        Some(p) => p,
        None => {
            let qp = qeulerian::q_poly(args.n)?;
            match &args.x {
                Some(x) => qp.at_q(x),
                None => {
                    if let Some(t) = &args.t {
                        // Evaluate in t, keeping q symbolic.
                        let value = qp
                            .coeffs()
                            .iter()
                            .enumerate()
                            .fold(Poly::zero(eulerian::Var::Q), |acc, (k, c)| acc + c.scale(&t.pow(k as u32)));
                        let doc = OutputDocument {
                            kind: Kind::Q,
                            n: args.n,
                            a,
                            d,
                            rows: Payload::Polys(vec![vec![value.into_coeffs()]]),
                        };
                        return emit(&doc, args.format, out);
                    }
                    let doc = OutputDocument {
                        kind: Kind::Q,
                        n: args.n,
                        a,
                        d,
                        rows: Payload::Polys(vec![qp.coeffs().iter().map(|c| c.coeffs().to_vec()).collect()]),
                    };
                    emit(&doc, args.format, out)?;
                    if args.format == Format::Plain {
                        let terms: Vec<String> = qp
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(k, c)| format!("({c})*t^{k}"))
                            .collect();
                        writeln!(out, "{}", terms.join(" + ")).map_err(|e| usage(e.to_string()))?;
                    }
                    return Ok(());
                }
            }
        }
    };
    if let Some(t) = &args.t {
        let doc = OutputDocument {
            kind: args.kind,
            n: args.n,
            a,
            d,
            rows: Payload::Scalars(vec![vec![poly.eval(t)]]),
        };
        return emit(&doc, args.format, out);
    }
    let doc = OutputDocument {
        kind: args.kind,
        n: args.n,
        a,
        d,
        rows: Payload::Scalars(vec![poly.coeffs().to_vec()]),
    };
    emit(&doc, args.format, out)?;
    if args.format == Format::Plain {
        writeln!(out, "{poly}").map_err(|e| usage(e.to_string()))?;
    }
    Ok(())
}

fn powersum(args: PowersumArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let prog = args.prog.progression();
    let value = match &args.t {
        None => {
            let value = general::general_power_sum(&prog, args.n, args.m);
            let direct = oracle::direct_power_sum(&prog, args.n as u32, args.m);
            if value != direct {
                let _ = writeln!(err, "closed form {value} disagrees with direct sum {direct}");
                return Err(Failure::Verification);
            }
            value
        }
        Some(t) => {
            let value = general::weighted_power_sum(&prog, args.n, args.m, t);
            let direct = oracle::direct_weighted_sum(&prog, args.n as u32, args.m, 1).eval(t);
            if value != direct {
                let _ = writeln!(err, "closed form {value} disagrees with direct sum {direct}");
                return Err(Failure::Verification);
            }
            value
        }
    };
    let doc = OutputDocument {
        kind: Kind::General,
        n: args.n,
        a: Some(prog.a),
        d: Some(prog.d),
        rows: Payload::Scalars(vec![vec![value]]),
    };
    emit(&doc, args.format, out)
}

#[derive(Serialize)]
struct JsonMismatch<'a> {
    index: usize,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    identity: &'a str,
    params: &'a str,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<JsonMismatch<'a>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    passed: usize,
    failed: usize,
    expected_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    records: Vec<JsonRecord<'a>>,
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = JsonReport {
                passed: report.count(Status::Pass),
                failed: report.count(Status::Fail),
                expected_failures: report.count(Status::ExpectedFail),
                error: report.error.as_ref().map(Error::to_string),
                records: report
                    .records
                    .iter()
                    .map(|r| JsonRecord {
                        identity: r.identity,
                        params: &r.params,
                        status: r.status.label(),
                        mismatch: r.mismatch.as_ref().map(|m| JsonMismatch {
                            index: m.index,
                            lhs: &m.lhs,
                            rhs: &m.rhs,
                        }),
                    })
                    .collect(),
            };
            format!("{}\n", serde_json::to_string(&doc).expect("report serializes"))
        }
        Format::Plain | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut s = String::new();
            for r in &report.records {
                if format == Format::Csv {
                    let detail = r.mismatch.as_ref().map(|m| m.to_string()).unwrap_or_default();
                    s.push_str(&[r.status.label(), r.identity, &r.params, &detail].join(sep));
                    s.push('\n');
                } else {
                    s.push_str(&format!("{r}\n"));
                }
            }
            if format == Format::Plain {
                s.push_str(&format!(
                    "summary: {} passed, {} failed, {} expected failures\n",
                    report.count(Status::Pass),
                    report.count(Status::Fail),
                    report.count(Status::ExpectedFail)
                ));
            }
            s
        }
    }
}

fn verify_cmd(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (oracle_bound, q_bound) = bounds(args.slow);
    let grid = match (&args.prog.a, &args.prog.d) {
        (None, None) => general::default_grid(),
        (Some(_), Some(_)) => vec![args.prog.progression()],
        _ => return Err(usage("give both --a and --d, or neither")),
    };
    let limits = Limits {
        max_n: args.max_n,
        max_m: args.max_m,
        order: args.order,
        grid,
        oracle_bound,
        q_bound,
    };
    let report = verify::verify_suite(args.suite, &limits)?;
    out.write_all(render_report(&report, args.format).as_bytes())
        .map_err(|e| usage(e.to_string()))?;
    if let Some(e) = &report.error {
        return Err(Failure::Resource(format!("{e}; report is partial")));
    }
    if report.failures() > 0 {
        let _ = writeln!(err, "{} identity checks failed", report.failures());
        return Err(Failure::Verification);
    }
    Ok(())
}
