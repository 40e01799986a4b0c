//! `sidon`: certified Sidon/B₂[g] subset extraction from the command line.
//!
//! Subcommands: `extract` (full pipeline on an integer or point file),
//! `verify` (ground-truth checks), `oracle` (exact optimum on small sets),
//! `singer` (difference-set coverings), `bench` (input families + table).
//! Reports go to stdout as JSON, CSV or text; when `SIDON_OUT_DIR` is set
//! a copy lands in `$SIDON_OUT_DIR/<command>.<ext>`. Exit codes: 0 ok or
//! verified, 1 verification failure, 2 usage error, 3 internal invariant
//! violation.

mod bench;
mod input;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Ratio;
use sidon_core::report::{
    to_json_bytes, ExtractionDoc, OracleDoc, PointsDoc, SingerDoc, VerifyDoc, SCHEMA_VERSION,
};
use sidon_core::{
    extract_with, is_b2g, is_sidon, lifted_cover, max_b2g, max_sidon, project, pullback_points,
    sidon_cover, singer_difference_set, ExtractError, FieldError, SingerError,
};

use bench::{render_bench, run_bench, BenchSpec};
use input::{parse_integers, parse_points};

#[derive(Parser)]
#[command(name = "sidon", version, about = "Certified Sidon/B2[g] subset extraction")]
struct RunConfig {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full extraction pipeline on an input file
    Extract(ExtractArgs),
    /// Check a set against the exact verifiers
    Verify(VerifyArgs),
    /// Exact maximum subset by branch and bound (small inputs)
    Oracle(OracleArgs),
    /// Build and certify a Singer difference-set covering
    Singer(SingerArgs),
    /// Run a benchmark family and emit a result table
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sidon,
    #[value(name = "b2g")]
    B2g,
}

#[derive(Args)]
struct ExtractArgs {
    /// Representation bound of the certificate (1 = Sidon)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    /// Modulus over-size factor (rational, > 1): m is the least g(p²+p+1) ≥ c·n
    #[arg(long, default_value = "3", value_parser = parse_ratio)]
    c: Ratio<i64>,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Input lines are rational points instead of integers
    #[arg(long)]
    points: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    file: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    /// Verify modulo this value instead of over the integers
    #[arg(long = "mod")]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    file: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    /// Node budget; without it the search runs to proof of optimality
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    file: PathBuf,
}

#[derive(Args)]
struct SingerArgs {
    /// Prime order of the underlying projective plane
    #[arg(long)]
    q: u64,
    /// 1 builds the Sidon covering, g ≥ 2 the lifted B₂[g] covering
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// interval | squares | primes | dominoes | two-intervals | geometric | random
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    instances: usize,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    g: u64,
    #[arg(long, default_value = "3", value_parser = parse_ratio)]
    c: Ratio<i64>,
    /// Largest spacing between domino pairs (≥ 3)
    #[arg(long, default_value_t = 8)]
    gap: u64,
    /// Growth factor of the geometric family (> 1)
    #[arg(long, default_value = "2", value_parser = parse_ratio)]
    ratio: Ratio<i64>,
    /// Fraction of elements in the first of the two intervals
    #[arg(long, default_value = "1/2", value_parser = parse_ratio)]
    split: Ratio<i64>,
    /// Run the exact oracle even above the automatic n ≤ 30 limit
    #[arg(long)]
    with_oracle: bool,
    /// Add wall-clock columns (makes output bytes run-dependent)
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation or malformed input: exit 2.
    Usage(String),
    /// A certification or bookkeeping invariant broke: exit 3.
    Internal(String),
}

impl From<input::InputError> for CliError {
    fn from(e: input::InputError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>, String> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (
            p.parse::<i64>().map_err(|e| e.to_string())?,
            q.parse::<i64>().map_err(|e| e.to_string())?,
        ),
        None => (s.parse::<i64>().map_err(|e| e.to_string())?, 1),
    };
    if den == 0 {
        return Err("zero denominator".into());
    }
    Ok(Ratio::new(num, den))
}

fn main() -> ExitCode {
    match run(RunConfig::parse()) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(config: RunConfig) -> Result<ExitCode, CliError> {
    match config.command {
        Command::Extract(args) => run_extract(args),
        Command::Verify(args) => run_verify(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Singer(args) => run_singer(args),
        Command::Bench(args) => run_bench_cmd(args),
    }
}

/// Writes the report to stdout and, when `SIDON_OUT_DIR` is set, to
/// `<dir>/<name>.<ext>`.
fn emit(name: &str, format: Format, bytes: &[u8]) -> Result<(), CliError> {
    std::io::stdout()
        .write_all(bytes)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    if let Ok(dir) = std::env::var("SIDON_OUT_DIR") {
        if !dir.is_empty() {
            let dir = PathBuf::from(dir);
            std::fs::create_dir_all(&dir)
                .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join(format!("{name}.{}", format.extension()));
            std::fs::write(&path, bytes)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(())
}

fn map_extract_err(e: ExtractError) -> CliError {
    match e {
        ExtractError::EmptyInput => CliError::Usage(e.to_string()),
        ExtractError::CertificationFailed(_) => CliError::Internal(e.to_string()),
    }
}

fn run_extract(args: ExtractArgs) -> Result<ExitCode, CliError> {
    if args.c <= Ratio::from_integer(1) {
        return Err(CliError::Usage("c must exceed 1".into()));
    }
    if args.points {
        let (ps, removed) = parse_points(&args.file)?;
        let cert = project(&ps, args.seed);
        let report = extract_with(&cert.integers, args.g, args.c, args.trials, args.seed)
            .map_err(map_extract_err)?;
        let chosen = pullback_points(&ps, &cert, &report.subset)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        let mut doc = PointsDoc::new(&ps, &cert, &report, &chosen);
        doc.dedup_removed = removed;
        emit("extract", args.format, &render_points(&doc, args.format))?;
    } else {
        let (values, removed) = parse_integers(&args.file)?;
        let report = extract_with(&values, args.g, args.c, args.trials, args.seed)
            .map_err(map_extract_err)?;
        let mut doc = ExtractionDoc::new(&report);
        doc.dedup_removed += removed;
        emit("extract", args.format, &render_extraction(&doc, args.format))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let (values, _) = parse_integers(&args.file)?;
    let modulus = args
        .modulus
        .as_deref()
        .map(|s| BigInt::from_str(s).map_err(|e| CliError::Usage(format!("bad modulus: {e}"))))
        .transpose()?;
    let (kind, g, outcome) = match args.kind {
        Kind::Sidon => ("sidon", 1, is_sidon(&values, modulus.as_ref())),
        Kind::B2g => ("b2g", args.g, is_b2g(&values, args.g, modulus.as_ref())),
    };
    let doc = VerifyDoc {
        schema: SCHEMA_VERSION,
        kind: kind.into(),
        g,
        modulus: modulus.map(|m| m.to_string()),
        n: values.len(),
        ok: outcome.is_ok(),
        witness: outcome.as_ref().err().map(|w| w.to_string()),
    };
    emit("verify", args.format, &render_verify(&doc, args.format))?;
    Ok(if doc.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_oracle(args: OracleArgs) -> Result<ExitCode, CliError> {
    let (values, _) = parse_integers(&args.file)?;
    if values.len() > 40 {
        eprintln!(
            "note: {} elements; expect exponential search time above 40",
            values.len()
        );
    }
    let (g, result) = match args.kind {
        Kind::Sidon => (1, max_sidon(&values, args.budget)),
        Kind::B2g => (args.g, max_b2g(&values, args.g, args.budget)),
    };
    let doc = OracleDoc::new(g, values.len(), &result);
    emit("oracle", args.format, &render_oracle(&doc, args.format))?;
    Ok(ExitCode::SUCCESS)
}

fn run_singer(args: SingerArgs) -> Result<ExitCode, CliError> {
    let map_err = |e: SingerError| match e {
        SingerError::Field(FieldError::CompositeModulus(_))
        | SingerError::Field(FieldError::FieldTooLarge(_)) => CliError::Usage(e.to_string()),
        _ => CliError::Internal(e.to_string()),
    };
    let d = singer_difference_set(args.q).map_err(map_err)?;
    let doc = if args.g == 1 {
        SingerDoc::new_sidon(&d, &sidon_cover(&d).map_err(map_err)?)
    } else {
        SingerDoc::new_lifted(&d, &lifted_cover(&d, args.g).map_err(map_err)?)
    };
    emit("singer", args.format, &render_singer(&doc, args.format))?;
    Ok(ExitCode::SUCCESS)
}

fn run_bench_cmd(args: BenchArgs) -> Result<ExitCode, CliError> {
    if args.c <= Ratio::from_integer(1) {
        return Err(CliError::Usage("c must exceed 1".into()));
    }
    let spec = BenchSpec {
        family: args.family,
        n: args.n,
        seed: args.seed,
        instances: args.instances,
        trials: args.trials,
        g: args.g,
        c: args.c,
        gap: args.gap,
        ratio: args.ratio,
        split: args.split,
        with_oracle: args.with_oracle,
        timings: args.timings,
    };
    let doc = run_bench(&spec)?;
    emit("bench", args.format, &render_bench(&doc, args.format))?;
    Ok(ExitCode::SUCCESS)
}

fn csv_table(header: &[&str], row: &[String]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).unwrap();
    w.write_record(row).unwrap();
    w.into_inner().unwrap()
}

const EXTRACT_CSV_HEADER: [&str; 17] = [
    "kind", "g", "n", "dedup_removed", "p", "m", "c_target", "theta", "b_size", "c_size",
    "trials_used", "block_index", "block_intersection", "subset_size", "ratio", "certified",
    "subset",
];

fn extraction_csv_row(doc: &ExtractionDoc) -> Vec<String> {
    vec![
        doc.kind.clone(),
        doc.g.to_string(),
        doc.n.to_string(),
        doc.dedup_removed.to_string(),
        doc.p.to_string(),
        doc.m.to_string(),
        doc.c_target.clone(),
        doc.theta.clone(),
        doc.b_size.to_string(),
        doc.c_size.to_string(),
        doc.trials_used.to_string(),
        doc.block_index.to_string(),
        doc.block_intersection.to_string(),
        doc.subset_size.to_string(),
        doc.ratio.clone(),
        doc.certified.to_string(),
        doc.subset.join(" "),
    ]
}

fn extraction_text(doc: &ExtractionDoc) -> String {
    format!(
        "kind: {}\ng: {}\nn: {} (dedup removed {})\nmodulus: m = {} (p = {}, c = {})\ntheta: {}\n|B|: {}\n|C|: {}\ntrials_used: {}\nblock: {} (intersection {})\n|S|: {}\nratio: {}\ncertified: {}\nsubset: {}\n",
        doc.kind,
        doc.g,
        doc.n,
        doc.dedup_removed,
        doc.m,
        doc.p,
        doc.c_target,
        doc.theta,
        doc.b_size,
        doc.c_size,
        doc.trials_used,
        doc.block_index,
        doc.block_intersection,
        doc.subset_size,
        doc.ratio,
        doc.certified,
        doc.subset.join(" "),
    )
}

fn render_extraction(doc: &ExtractionDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => csv_table(&EXTRACT_CSV_HEADER, &extraction_csv_row(doc)),
        Format::Text => extraction_text(doc).into_bytes(),
    }
}

fn render_points(doc: &PointsDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => {
            let mut header = vec!["dim", "n_points", "points_dedup_removed", "direction",
                "common_denominator", "min_gap"];
            header.extend(EXTRACT_CSV_HEADER);
            let mut row = vec![
                doc.dim.to_string(),
                doc.n_points.to_string(),
                doc.dedup_removed.to_string(),
                doc.direction.join(" "),
                doc.common_denominator.clone(),
                doc.min_gap.clone().unwrap_or_default(),
            ];
            row.extend(extraction_csv_row(&doc.extraction));
            csv_table(&header, &row)
        }
        Format::Text => {
            let mut out = format!(
                "dim: {}\npoints: {} (dedup removed {})\ndirection: {}\ncommon_denominator: {}\nmin_gap: {}\n",
                doc.dim,
                doc.n_points,
                doc.dedup_removed,
                doc.direction.join(" "),
                doc.common_denominator,
                doc.min_gap.clone().unwrap_or_else(|| "-".into()),
            );
            out.push_str(&extraction_text(&doc.extraction));
            out.push_str("points:\n");
            for p in &doc.points {
                out.push_str(&format!("  {}\n", p.join(" ")));
            }
            out.into_bytes()
        }
    }
}

fn render_verify(doc: &VerifyDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => csv_table(
            &["kind", "g", "modulus", "n", "ok", "witness"],
            &[
                doc.kind.clone(),
                doc.g.to_string(),
                doc.modulus.clone().unwrap_or_default(),
                doc.n.to_string(),
                doc.ok.to_string(),
                doc.witness.clone().unwrap_or_default(),
            ],
        ),
        Format::Text => match &doc.witness {
            None => format!("ok: {} elements verified ({})\n", doc.n, doc.kind).into_bytes(),
            Some(w) => format!("violation: {w}\n").into_bytes(),
        },
    }
}

fn render_oracle(doc: &OracleDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => csv_table(
            &["kind", "g", "n", "optimum", "nodes_explored", "exhausted", "witness"],
            &[
                doc.kind.clone(),
                doc.g.to_string(),
                doc.n.to_string(),
                doc.optimum.to_string(),
                doc.nodes_explored.to_string(),
                doc.exhausted.to_string(),
                doc.witness.join(" "),
            ],
        ),
        Format::Text => format!(
            "optimum: {}\nexhausted: {}\nnodes_explored: {}\nwitness: {}\n",
            doc.optimum,
            doc.exhausted,
            doc.nodes_explored,
            doc.witness.join(" "),
        )
        .into_bytes(),
    }
}

fn render_singer(doc: &SingerDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => csv_table(
            &["q", "g", "modulus", "block_count", "block_size", "certified", "difference_set"],
            &[
                doc.q.to_string(),
                doc.g.to_string(),
                doc.modulus.to_string(),
                doc.block_count.to_string(),
                doc.block_size.to_string(),
                doc.certified.to_string(),
                doc.difference_set
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ],
        ),
        Format::Text => format!(
            "q: {}\ng: {}\nmodulus: {}\nblocks: {} × {}\ncertified: {}\ndifference_set: {}\n",
            doc.q,
            doc.g,
            doc.modulus,
            doc.block_count,
            doc.block_size,
            doc.certified,
            doc.difference_set
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        )
        .into_bytes(),
    }
}
