//! Subcommand definitions and their implementations.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! and the tests share one code path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motzkin_ct::cores::{conjecture_check, coprime_pairs, count_simultaneous_cores};
use motzkin_ct::identities::{
    general_identity_check, lhs_problem, pascal_analogy_check, sweep, term_bridge,
    theorem1_check, theorem2_check, theorem2_exact_check, theorem2_rhs, VerificationReport,
};
use motzkin_ct::triangles::{
    binomial, catalan_variant, extended_row, motzkin_row, motzkin_t, trinomial,
};
use motzkin_ct::{Error, Result, TriangleSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::bfile::BFile;

#[derive(Debug, Parser)]
#[command(name = "motzkin", version, about = "Motzkin triangle identities, checked exactly")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Directory holding b-file fixtures.
    #[arg(long, default_value = "fixtures", global = true)]
    pub fixtures: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Plain,
    /// One JSON object per line.
    Records,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of a number triangle.
    Triangle(TriangleArgs),
    /// Check an identity over a parameter range.
    Verify(VerifyArgs),
    /// Count simultaneous (s, s+d, s+2d)-core partitions.
    Cores(CoresArgs),
    /// Compare a computed sequence with a b-file.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleKind {
    Motzkin,
    Extended,
    Trinomial,
    Pascal,
    CatalanVariant,
    General,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[arg(long, value_enum, default_value_t = TriangleKind::Motzkin)]
    pub kind: TriangleKind,
    #[arg(long, default_value_t = 10)]
    pub max_n: u32,
    /// Palindromic coefficients a_0,...,a_d of P(x) for `--kind general`.
    #[arg(long)]
    pub coeffs: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// sum_k T(n,k) T(n,k+1) = binomial sum = T(2n,2n-1)/2, for n in 0..=max-n.
    Theorem1,
    /// Two-parameter binomial sum = T(s+d-1,s)/d over the (s, d) grid.
    Theorem2,
    /// Row-product identity for the triangle of --coeffs.
    General,
    /// sum_k C(n,k) C(n,k+1) = C(2n,n+1).
    PascalAnalogy,
    /// C(2k+d,k)/(2k+d) = C(2k+d-1,k)/(k+d).
    TermBridge,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    /// Largest n (theorem1: 200, general: 30, pascal-analogy: 200).
    #[arg(long)]
    pub max_n: Option<u32>,
    /// Largest s for theorem2 (default 100).
    #[arg(long)]
    pub max_s: Option<u32>,
    /// Largest d (theorem2: 10, term-bridge: 20).
    #[arg(long)]
    pub max_d: Option<u32>,
    /// Largest k for term-bridge (default 500).
    #[arg(long)]
    pub max_k: Option<u32>,
    /// Palindromic coefficients for `general` (default 1,1,1).
    #[arg(long)]
    pub coeffs: Option<String>,
    /// theorem2: skip pairs with gcd(s, d) > 1.
    #[arg(long)]
    pub coprime_only: bool,
    /// theorem2: also require d | T(s+d-1, s), failing pairs where it does not hold.
    #[arg(long)]
    pub require_divisibility: bool,
}

#[derive(Debug, Args)]
pub struct CoresArgs {
    #[arg(long = "s")]
    pub s: Option<u32>,
    #[arg(long = "d")]
    pub d: Option<u32>,
    /// Without --s/--d, check every coprime pair with s + 2d <= this.
    #[arg(long, default_value_t = 15)]
    pub max_sum: u32,
    /// Also print counts per partition size.
    #[arg(long)]
    pub by_size: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    /// sum_k T(n,k) T(n,k+1) (A026940).
    ProblemLhs,
    /// Motzkin triangle read by rows (A026300).
    MotzkinRowConcat,
    /// Trinomial triangle read by rows (A027907).
    TrinomialRowConcat,
}

impl Sequence {
    pub fn default_file(self) -> &'static str {
        match self {
            Sequence::ProblemLhs => "b026940.txt",
            Sequence::MotzkinRowConcat => "b026300.txt",
            Sequence::TrinomialRowConcat => "b027907.txt",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sequence::ProblemLhs => "problem-lhs",
            Sequence::MotzkinRowConcat => "motzkin-row-concat",
            Sequence::TrinomialRowConcat => "trinomial-row-concat",
        }
    }

    /// Term at `index`, or `None` outside the sequence's domain.
    pub fn term(self, index: i64) -> Option<BigInt> {
        let i = u64::try_from(index).ok()?;
        Some(match self {
            Sequence::ProblemLhs => lhs_problem(u32::try_from(i).ok()?),
            Sequence::MotzkinRowConcat => {
                // rows 0..n hold n(n+1)/2 entries
                let mut n = ((2.0 * i as f64).sqrt() as u64).saturating_sub(1);
                while (n + 1) * (n + 2) / 2 <= i {
                    n += 1;
                }
                motzkin_t(u32::try_from(n).ok()?, (i - n * (n + 1) / 2) as i64)
            }
            Sequence::TrinomialRowConcat => {
                // rows 0..n hold n^2 entries
                let mut n = (i as f64).sqrt() as u64;
                while n * n > i {
                    n -= 1;
                }
                while (n + 1) * (n + 1) <= i {
                    n += 1;
                }
                trinomial(u32::try_from(n).ok()?, (i - n * n) as i64)
            }
        })
    }
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(value_enum)]
    pub sequence: Sequence,
    /// b-file to read; defaults to the sequence's file in --fixtures.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Mismatch = 1,
    InputError = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            status: Status::InputError,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Triangle(args) => cmd_triangle(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Cores(args) => cmd_cores(args, cli.format),
        Command::Compare(args) => cmd_compare(args, cli.format, &cli.fixtures),
    }
}

fn parse_spec(coeffs: Option<&str>) -> Result<TriangleSpec> {
    match coeffs {
        Some(c) => c.parse(),
        None => Ok(TriangleSpec::motzkin()),
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn report_record(report: &VerificationReport) -> Value {
    let params: serde_json::Map<String, Value> =
        report.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let values: serde_json::Map<String, Value> = report
        .values
        .iter()
        .map(|(k, v)| (k.clone(), json!(v.to_string())))
        .collect();
    json!({
        "identity": report.identity,
        "params": params,
        "values": values,
        "equal": report.equal,
    })
}

pub fn cmd_triangle(args: &TriangleArgs, format: Format) -> Outcome {
    let spec = match (args.kind, args.coeffs.as_deref()) {
        (TriangleKind::General, None) => {
            return Outcome::input_error("--kind general needs --coeffs");
        }
        (TriangleKind::General, Some(c)) => match c.parse::<TriangleSpec>() {
            Ok(spec) => Some(spec),
            Err(e) => return Outcome::input_error(e),
        },
        _ => None,
    };
    let mut out = String::new();
    for n in 0..=args.max_n {
        let n64 = i64::from(n);
        let row: Vec<BigInt> = match args.kind {
            TriangleKind::Motzkin => motzkin_row(n).to_vec(),
            TriangleKind::Extended => extended_row(n),
            TriangleKind::Trinomial => (0..=2 * n64).map(|k| trinomial(n, k)).collect(),
            TriangleKind::Pascal => (0..=n64).map(|k| binomial(n, k)).collect(),
            TriangleKind::CatalanVariant => (0..=n64 + 1).map(|k| catalan_variant(n, k)).collect(),
            TriangleKind::General => spec.as_ref().expect("parsed above").row(n),
        };
        match format {
            Format::Plain => {
                let _ = writeln!(out, "{}", strings(&row).join(" "));
            }
            Format::Records => {
                let kind = TriangleKind::value_variants()
                    .iter()
                    .find(|k| **k == args.kind)
                    .and_then(|k| k.to_possible_value())
                    .map(|v| v.get_name().to_string());
                let _ = writeln!(out, "{}", json!({"kind": kind, "row": n, "values": strings(&row)}));
            }
        }
    }
    Outcome { stdout: out, stderr: String::new(), status: Status::Success }
}

/// Renders a sweep: records for every check (records mode) or just the
/// first failure (plain mode), then a summary.
fn render_sweep<P: std::fmt::Debug>(
    name: &str,
    params: &[P],
    reports: &[Result<VerificationReport>],
    format: Format,
    notes: &[String],
) -> Outcome {
    let total = reports.len();
    let passed = reports.iter().filter(|r| matches!(r, Ok(rep) if rep.equal)).count();
    let mut out = String::new();
    match format {
        Format::Plain => {
            let failure = params.iter().zip(reports).find(|(_, r)| !matches!(r, Ok(rep) if rep.equal));
            match failure {
                Some((_, Ok(rep))) => {
                    let _ = writeln!(out, "first counterexample: {rep}");
                }
                Some((p, Err(e))) => {
                    let _ = writeln!(out, "first failure at {p:?}: {e}");
                }
                None => {}
            }
            for note in notes {
                let _ = writeln!(out, "note: {note}");
            }
            let _ = writeln!(out, "{name}: {passed}/{total} pass");
        }
        Format::Records => {
            for (p, r) in params.iter().zip(reports) {
                let record = match r {
                    Ok(rep) => report_record(rep),
                    Err(e) => json!({
                        "identity": name,
                        "params": format!("{p:?}"),
                        "error": e.to_string(),
                        "equal": false,
                    }),
                };
                let _ = writeln!(out, "{record}");
            }
            let _ = writeln!(
                out,
                "{}",
                json!({"identity": name, "summary": {"total": total, "passed": passed}, "notes": notes, "equal": passed == total})
            );
        }
    }
    let status = if passed == total { Status::Success } else { Status::Mismatch };
    Outcome { stdout: out, stderr: String::new(), status }
}

pub fn cmd_verify(args: &VerifyArgs, format: Format) -> Outcome {
    match args.identity {
        Identity::Theorem1 => {
            let params: Vec<u32> = (0..=args.max_n.unwrap_or(200)).collect();
            let outcome = sweep(params.clone(), theorem1_check);
            render_sweep("theorem1", &params, &outcome.reports, format, &[])
        }
        Identity::Theorem2 => {
            let (max_s, max_d) = (args.max_s.unwrap_or(100), args.max_d.unwrap_or(10));
            let params: Vec<(u32, u32)> = (1..=max_s)
                .flat_map(|s| (1..=max_d).map(move |d| (s, d)))
                .filter(|&(s, d)| !args.coprime_only || gcd(s, d) == 1)
                .collect();
            let outcome = if args.require_divisibility {
                sweep(params.clone(), |(s, d)| theorem2_check(s, d))
            } else {
                sweep(params.clone(), |(s, d)| theorem2_exact_check(s, d))
            };
            let divisible = params.iter().filter(|&&(s, d)| theorem2_rhs(s, d).is_ok()).count();
            let coprime = params.iter().filter(|&&(s, d)| gcd(s, d) == 1).count();
            let note = format!(
                "d | T(s+d-1, s) on {divisible}/{} pairs ({coprime} coprime)",
                params.len()
            );
            render_sweep("theorem2", &params, &outcome.reports, format, &[note])
        }
        Identity::General => {
            let spec = match parse_spec(args.coeffs.as_deref()) {
                Ok(spec) => spec,
                Err(e) => return Outcome::input_error(e),
            };
            let params: Vec<u32> = (0..=args.max_n.unwrap_or(30)).collect();
            let outcome = sweep(params.clone(), |n| general_identity_check(&spec, n));
            render_sweep("general", &params, &outcome.reports, format, &[])
        }
        Identity::PascalAnalogy => {
            let params: Vec<u32> = (0..=args.max_n.unwrap_or(200)).collect();
            let outcome = sweep(params.clone(), |n| Ok(pascal_analogy_check(n)));
            render_sweep("pascal-analogy", &params, &outcome.reports, format, &[])
        }
        Identity::TermBridge => {
            let (max_k, max_d) = (args.max_k.unwrap_or(500), args.max_d.unwrap_or(20));
            let params: Vec<(u32, u32)> = (0..=max_k)
                .flat_map(|k| (1..=max_d).map(move |d| (k, d)))
                .collect();
            let outcome = sweep(params.clone(), |(k, d)| term_bridge(k, d));
            render_sweep("term-bridge", &params, &outcome.reports, format, &[])
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

fn cores_line(report: &VerificationReport) -> String {
    let mut line = String::new();
    for (label, v) in &report.values {
        let _ = write!(line, "{label}={v} ");
    }
    line.push_str(if report.equal { "consistent" } else { "INCONSISTENT" });
    line
}

pub fn cmd_cores(args: &CoresArgs, format: Format) -> Outcome {
    let pairs = match (args.s, args.d) {
        (Some(s), Some(d)) => vec![(s, d)],
        (None, None) => coprime_pairs(args.max_sum),
        _ => return Outcome::input_error("--s and --d must be given together"),
    };
    let single = pairs.len() == 1 && args.s.is_some();
    let mut out = String::new();
    let mut consistent = 0;
    for &(s, d) in &pairs {
        let report = match conjecture_check(s, d) {
            Ok(r) => r,
            Err(e @ (Error::NotCoprime { .. } | Error::InvalidArgument(_))) => {
                return Outcome::input_error(e);
            }
            Err(e) => {
                return Outcome {
                    stdout: out,
                    stderr: format!("error: {e}\n"),
                    status: Status::Mismatch,
                };
            }
        };
        if report.equal {
            consistent += 1;
        }
        let by_size = if args.by_size {
            count_simultaneous_cores(s, d).ok().map(|c| c.by_size)
        } else {
            None
        };
        match format {
            Format::Plain => {
                if single {
                    let _ = writeln!(out, "{}", cores_line(&report));
                } else {
                    let _ = writeln!(out, "s={s} d={d} {}", cores_line(&report));
                }
                for (size, count) in by_size.iter().flatten() {
                    let _ = writeln!(out, "  size {size}: {count}");
                }
            }
            Format::Records => {
                let mut record = report_record(&report);
                if let Some(by_size) = by_size {
                    let map: serde_json::Map<String, Value> =
                        by_size.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                    record["by_size"] = Value::Object(map);
                }
                let _ = writeln!(out, "{record}");
            }
        }
    }
    if !single {
        match format {
            Format::Plain => {
                let _ = writeln!(
                    out,
                    "{consistent}/{} pairs consistent with the conjectured formula",
                    pairs.len()
                );
            }
            Format::Records => {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({"identity": "conjecture", "summary": {"total": pairs.len(), "passed": consistent}, "equal": consistent == pairs.len()})
                );
            }
        }
    }
    let status = if consistent == pairs.len() { Status::Success } else { Status::Mismatch };
    Outcome { stdout: out, stderr: String::new(), status }
}

pub fn cmd_compare(args: &CompareArgs, format: Format, fixtures: &std::path::Path) -> Outcome {
    let path = args
        .file
        .clone()
        .unwrap_or_else(|| fixtures.join(args.sequence.default_file()));
    let bfile = match BFile::read(&path) {
        Ok(b) => b,
        Err(e) => return Outcome::input_error(e),
    };
    let name = args.sequence.name();
    let mut out = String::new();
    let mut stderr = String::new();
    if bfile.is_empty() {
        let _ = writeln!(stderr, "warning: {} has no entries; nothing to compare", path.display());
    }
    let mut matched = 0;
    let mut first_mismatch = None;
    for (index, expected) in &bfile.entries {
        let Some(computed) = args.sequence.term(*index) else {
            return Outcome::input_error(format!("index {index} is outside the domain of {name}"));
        };
        let equal = &computed == expected;
        if equal {
            matched += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some((*index, expected.clone(), computed.clone()));
        }
        if format == Format::Records {
            let _ = writeln!(
                out,
                "{}",
                json!({
                    "identity": format!("compare:{name}"),
                    "params": {"index": index},
                    "values": {"bfile": expected.to_string(), "computed": computed.to_string()},
                    "equal": equal,
                })
            );
        }
    }
    let total = bfile.entries.len();
    if format == Format::Plain {
        if let Some((index, expected, computed)) = &first_mismatch {
            let _ = writeln!(out, "mismatch at index {index}: b-file has {expected}, computed {computed}");
        }
        let _ = writeln!(out, "{name} vs {}: {matched}/{total} indices match", path.display());
    }
    let status = if first_mismatch.is_none() { Status::Success } else { Status::Mismatch };
    Outcome { stdout: out, stderr, status }
}
