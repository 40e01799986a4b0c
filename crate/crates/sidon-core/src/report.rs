//! Versioned, byte-stable JSON documents for every pipeline artifact.
//!
//! Field order is fixed by declaration, rationals are always rendered as
//! `p/q`, big integers in decimal, and the density ratio with exactly six
//! decimals, so a report serializes to identical bytes on every run with
//! the same seed regardless of worker-thread count. Regression tests diff
//! these bytes directly; bump [`SCHEMA_VERSION`] on any layout change.

use num_rational::{BigRational, Ratio};
use serde::Serialize;

use crate::compress::CompressionResult;
use crate::extract::{CertificateKind, ExtractionReport};
use crate::geometry::{PointSet, ReductionCertificate};
use crate::oracle::OracleResult;
use crate::singer::{B2gCover, PlanarDifferenceSet, SidonCover};

pub const SCHEMA_VERSION: u32 = 1;

/// Serializes any report document: pretty JSON plus a trailing newline.
pub fn to_json_bytes<T: Serialize>(doc: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(doc).expect("report serialization");
    bytes.push(b'\n');
    bytes
}

fn ratio_str(r: &Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn big_ratio_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn six_decimals(x: f64) -> String {
    format!("{x:.6}")
}

/// One modular compression run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompressionDoc {
    pub schema: u32,
    pub theta: String,
    pub m: u64,
    pub k: u64,
    pub b_size: usize,
    pub c_size: usize,
    pub collisions_removed: usize,
    pub trials_used: u64,
    pub image: Vec<u64>,
}

impl CompressionDoc {
    pub fn new(r: &CompressionResult) -> CompressionDoc {
        CompressionDoc {
            schema: SCHEMA_VERSION,
            theta: r.theta.to_string(),
            m: r.m,
            k: r.k,
            b_size: r.b_size,
            c_size: r.image.len(),
            collisions_removed: r.collisions_removed,
            trials_used: r.trials_used,
            image: r.image.clone(),
        }
    }
}

/// One full extraction run on an integer set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionDoc {
    pub schema: u32,
    pub kind: String,
    pub g: u64,
    pub n: usize,
    pub dedup_removed: usize,
    pub p: u64,
    pub m: u64,
    pub c_target: String,
    pub theta: String,
    pub b_size: usize,
    pub c_size: usize,
    pub trials_used: u64,
    pub block_index: usize,
    pub block_intersection: usize,
    pub subset_size: usize,
    /// |S|/√n with six decimals.
    pub ratio: String,
    pub certified: bool,
    pub subset: Vec<String>,
}

impl ExtractionDoc {
    pub fn new(r: &ExtractionReport) -> ExtractionDoc {
        let (kind, g) = match r.certificate_kind {
            CertificateKind::Sidon => ("sidon", 1),
            CertificateKind::B2g(g) => ("b2g", g),
        };
        ExtractionDoc {
            schema: SCHEMA_VERSION,
            kind: kind.to_string(),
            g,
            n: r.n,
            dedup_removed: r.dedup_removed,
            p: r.modulus.p,
            m: r.modulus.m,
            c_target: ratio_str(&r.modulus.c_target),
            theta: r.compression.theta.to_string(),
            b_size: r.compression.b_size,
            c_size: r.compression.c_size,
            trials_used: r.compression.trials_used,
            block_index: r.chosen_block.index,
            block_intersection: r.chosen_block.intersection,
            subset_size: r.subset.len(),
            ratio: six_decimals(r.ratio),
            certified: r.certified,
            subset: r.subset.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// Extraction on a rational point set: the reduction certificate wrapped
/// around the 1-D extraction, plus the pulled-back points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointsDoc {
    pub schema: u32,
    pub dim: usize,
    pub n_points: usize,
    /// Duplicate points dropped during input parsing, if any.
    pub dedup_removed: usize,
    pub direction: Vec<String>,
    pub common_denominator: String,
    pub min_gap: Option<String>,
    pub extraction: ExtractionDoc,
    pub points: Vec<Vec<String>>,
}

impl PointsDoc {
    pub fn new(
        ps: &PointSet,
        cert: &ReductionCertificate,
        report: &ExtractionReport,
        chosen_points: &[Vec<BigRational>],
    ) -> PointsDoc {
        PointsDoc {
            schema: SCHEMA_VERSION,
            dim: ps.dim(),
            n_points: ps.len(),
            dedup_removed: 0,
            direction: cert.direction.iter().map(|v| v.to_string()).collect(),
            common_denominator: cert.common_denominator.to_string(),
            min_gap: cert.min_gap.as_ref().map(big_ratio_str),
            extraction: ExtractionDoc::new(report),
            points: chosen_points
                .iter()
                .map(|p| p.iter().map(big_ratio_str).collect())
                .collect(),
        }
    }
}

/// One branch-and-bound run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDoc {
    pub schema: u32,
    pub kind: String,
    pub g: u64,
    pub n: usize,
    pub optimum: u64,
    pub nodes_explored: u64,
    pub exhausted: bool,
    pub witness: Vec<String>,
}

impl OracleDoc {
    pub fn new(g: u64, input_size: usize, r: &OracleResult) -> OracleDoc {
        OracleDoc {
            schema: SCHEMA_VERSION,
            kind: if g == 1 { "sidon" } else { "b2g" }.to_string(),
            g,
            n: input_size,
            optimum: r.optimum,
            nodes_explored: r.nodes_explored,
            exhausted: r.exhausted,
            witness: r.witness.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// One verifier run; `witness` is the human-readable rejection reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyDoc {
    pub schema: u32,
    pub kind: String,
    pub g: u64,
    pub modulus: Option<String>,
    pub n: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

/// A Singer difference set together with its certified covering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingerDoc {
    pub schema: u32,
    pub q: u64,
    pub g: u64,
    pub modulus: u64,
    pub block_count: usize,
    pub block_size: usize,
    pub difference_set: Vec<u64>,
    pub certified: bool,
}

impl SingerDoc {
    pub fn new_sidon(d: &PlanarDifferenceSet, cover: &SidonCover) -> SingerDoc {
        SingerDoc {
            schema: SCHEMA_VERSION,
            q: d.q(),
            g: 1,
            modulus: cover.modulus(),
            block_count: cover.blocks().len(),
            block_size: d.elements().len(),
            difference_set: d.elements().to_vec(),
            certified: true,
        }
    }

    pub fn new_lifted(d: &PlanarDifferenceSet, cover: &B2gCover) -> SingerDoc {
        SingerDoc {
            schema: SCHEMA_VERSION,
            q: d.q(),
            g: cover.g(),
            modulus: cover.modulus(),
            block_count: cover.blocks().len(),
            block_size: cover.g() as usize * d.elements().len(),
            difference_set: d.elements().to_vec(),
            certified: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::extract_sidon;
    use num_bigint::BigInt;

    #[test]
    fn extraction_doc_is_byte_stable_and_parses() {
        let a: Vec<BigInt> = (0..30).map(BigInt::from).collect();
        let report = extract_sidon(&a, 32, 11).unwrap();
        let doc = ExtractionDoc::new(&report);
        let bytes = to_json_bytes(&doc);
        assert_eq!(bytes, to_json_bytes(&doc));
        assert_eq!(*bytes.last().unwrap(), b'\n');

        let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["kind"], "sidon");
        assert_eq!(value["c_target"], "3/1");
        assert_eq!(value["subset_size"].as_u64().unwrap() as usize, report.subset.len());
        let ratio = value["ratio"].as_str().unwrap();
        assert_eq!(ratio.split('.').nth(1).unwrap().len(), 6);
        assert!(value["theta"].as_str().unwrap().contains('/'));
    }

    #[test]
    fn six_decimal_rendering() {
        assert_eq!(six_decimals(0.19), "0.190000");
        assert_eq!(six_decimals(2.0), "2.000000");
        assert_eq!(ratio_str(&Ratio::new(7, 2)), "7/2");
        assert_eq!(ratio_str(&Ratio::from_integer(3)), "3/1");
    }
}
