//! Benchmark families and the bench runner: generates a family of inputs,
//! extracts from each instance (plus the exact oracle on small n), and
//! renders a per-instance table with a min/mean ratio summary.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;
use sidon_core::report::{to_json_bytes, SCHEMA_VERSION};
use sidon_core::seeding::derive_seed;
use sidon_core::{extract_with, max_b2g, primes};

use crate::{CliError, Format};

/// Oracle runs are automatic at or below this size.
pub const ORACLE_AUTO_LIMIT: usize = 30;

const DATA_STREAM: u64 = 0x00B0_0000;
const EXTRACT_STREAM: u64 = 0x00B1_0000;

pub struct BenchSpec {
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub instances: usize,
    pub trials: u64,
    pub g: u64,
    pub c: Ratio<i64>,
    /// Largest spacing between domino pairs (uniform in [3, gap]).
    pub gap: u64,
    /// Growth factor of the geometric family.
    pub ratio: Ratio<i64>,
    /// Fraction of elements in the first of the two intervals.
    pub split: Ratio<i64>,
    pub with_oracle: bool,
    pub timings: bool,
}

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum BenchError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRowDoc {
    pub instance: usize,
    pub n: usize,
    pub p: u64,
    pub m: u64,
    pub b_size: usize,
    pub c_size: usize,
    pub s_size: usize,
    pub ratio: String,
    pub oracle_optimum: Option<u64>,
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchSummaryDoc {
    pub instances: usize,
    pub min_ratio: String,
    pub mean_ratio: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchDoc {
    pub schema: u32,
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub g: u64,
    pub trials: u64,
    pub rows: Vec<BenchRowDoc>,
    pub summary: BenchSummaryDoc,
}

/// Exactly n distinct integers of the named family.
pub fn generate_family(spec: &BenchSpec, instance: usize) -> Result<Vec<BigInt>, BenchError> {
    let n = spec.n;
    if n == 0 {
        return Err(BenchError::InvalidParams("n must be at least 1".into()));
    }
    let data_seed = derive_seed(spec.seed, DATA_STREAM + instance as u64);
    let values: Vec<BigInt> = match spec.family.as_str() {
        "interval" => (1..=n as u64).map(BigInt::from).collect(),
        "squares" => (1..=n as u64).map(|i| BigInt::from(i * i)).collect(),
        "primes" => primes::first_primes(n).into_iter().map(BigInt::from).collect(),
        "dominoes" => {
            if n % 2 != 0 {
                return Err(BenchError::InvalidParams("dominoes need an even n".into()));
            }
            if spec.gap < 3 {
                return Err(BenchError::InvalidParams(
                    "domino gap must be at least 3".into(),
                ));
            }
            let mut rng = ChaCha12Rng::seed_from_u64(data_seed);
            let mut values = Vec::with_capacity(n);
            let mut base = 1u64;
            for _ in 0..n / 2 {
                values.push(BigInt::from(base));
                values.push(BigInt::from(base + 1));
                base += rng.gen_range(3..=spec.gap);
            }
            values
        }
        "two-intervals" => {
            let one = Ratio::from_integer(1);
            if spec.split <= Ratio::from_integer(0) || spec.split >= one {
                return Err(BenchError::InvalidParams(
                    "interval split must lie strictly between 0 and 1".into(),
                ));
            }
            let first = ((spec.split * Ratio::from_integer(n as i64)).floor().to_integer()
                as usize)
                .clamp(1, n.max(2) - 1);
            let offset = 10 * n as u64;
            (1..=first as u64)
                .chain(offset..offset + (n - first) as u64)
                .map(BigInt::from)
                .collect()
        }
        "geometric" => {
            if spec.ratio <= Ratio::from_integer(1) {
                return Err(BenchError::InvalidParams(
                    "geometric ratio must exceed 1".into(),
                ));
            }
            let (p, q) = (BigInt::from(*spec.ratio.numer()), BigInt::from(*spec.ratio.denom()));
            let mut values = Vec::with_capacity(n);
            let mut x = BigInt::from(1);
            for _ in 0..n {
                values.push(x.clone());
                let grown = &x * &p / &q;
                x = if grown > x { grown } else { x + 1 };
            }
            values
        }
        "random" => {
            let mut rng = ChaCha12Rng::seed_from_u64(data_seed);
            let mut set = BTreeSet::new();
            while set.len() < n {
                set.insert(rng.gen::<u64>() >> 4);
            }
            set.into_iter().map(BigInt::from).collect()
        }
        other => return Err(BenchError::UnknownFamily(other.to_string())),
    };
    debug_assert_eq!(values.len(), n);
    Ok(values)
}

pub fn run_bench(spec: &BenchSpec) -> Result<BenchDoc, CliError> {
    if spec.instances == 0 {
        return Err(CliError::Usage("need at least one instance".into()));
    }
    generate_family(spec, 0).map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<BenchRowDoc> = (0..spec.instances)
        .into_par_iter()
        .map(|i| run_instance(spec, i))
        .collect::<Result<_, _>>()?;
    let ratios: Vec<f64> = rows
        .iter()
        .map(|r| r.s_size as f64 / (r.n as f64).sqrt())
        .collect();
    let min = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    Ok(BenchDoc {
        schema: SCHEMA_VERSION,
        family: spec.family.clone(),
        n: spec.n,
        seed: spec.seed,
        g: spec.g,
        trials: spec.trials,
        rows,
        summary: BenchSummaryDoc {
            instances: spec.instances,
            min_ratio: format!("{min:.6}"),
            mean_ratio: format!("{mean:.6}"),
        },
    })
}

fn run_instance(spec: &BenchSpec, instance: usize) -> Result<BenchRowDoc, CliError> {
    let data = generate_family(spec, instance).map_err(|e| CliError::Usage(e.to_string()))?;
    let start = Instant::now();
    let extract_seed = derive_seed(spec.seed, EXTRACT_STREAM + instance as u64);
    let report = extract_with(&data, spec.g, spec.c, spec.trials, extract_seed)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let oracle_optimum = (spec.with_oracle || spec.n <= ORACLE_AUTO_LIMIT)
        .then(|| max_b2g(&data, spec.g, None).optimum);
    let wall_ms = spec
        .timings
        .then(|| start.elapsed().as_millis() as u64);
    Ok(BenchRowDoc {
        instance,
        n: spec.n,
        p: report.modulus.p,
        m: report.modulus.m,
        b_size: report.compression.b_size,
        c_size: report.compression.c_size,
        s_size: report.subset.len(),
        ratio: format!("{:.6}", report.ratio),
        oracle_optimum,
        wall_ms,
    })
}

pub const CSV_HEADER: [&str; 11] = [
    "family", "instance", "n", "p", "m", "b_size", "c_size", "s_size", "ratio",
    "oracle_optimum", "wall_ms",
];

fn opt(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn render_bench(doc: &BenchDoc, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json_bytes(doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).unwrap();
            for r in &doc.rows {
                w.write_record([
                    doc.family.as_str(),
                    &r.instance.to_string(),
                    &r.n.to_string(),
                    &r.p.to_string(),
                    &r.m.to_string(),
                    &r.b_size.to_string(),
                    &r.c_size.to_string(),
                    &r.s_size.to_string(),
                    &r.ratio,
                    &opt(r.oracle_optimum),
                    &opt(r.wall_ms),
                ])
                .unwrap();
            }
            for (label, value) in [
                ("min", &doc.summary.min_ratio),
                ("mean", &doc.summary.mean_ratio),
            ] {
                w.write_record([
                    doc.family.as_str(),
                    label,
                    &doc.n.to_string(),
                    "",
                    "",
                    "",
                    "",
                    "",
                    value,
                    "",
                    "",
                ])
                .unwrap();
            }
            w.into_inner().unwrap()
        }
        Format::Text => {
            let mut out = String::new();
            for r in &doc.rows {
                out.push_str(&format!(
                    "{} instance={} n={} p={} m={} |B|={} |C|={} |S|={} ratio={}",
                    doc.family, r.instance, r.n, r.p, r.m, r.b_size, r.c_size, r.s_size, r.ratio
                ));
                if let Some(o) = r.oracle_optimum {
                    out.push_str(&format!(" oracle={o}"));
                }
                if let Some(w) = r.wall_ms {
                    out.push_str(&format!(" wall_ms={w}"));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "summary instances={} min_ratio={} mean_ratio={}\n",
                doc.summary.instances, doc.summary.min_ratio, doc.summary.mean_ratio
            ));
            out.into_bytes()
        }
    }
}
