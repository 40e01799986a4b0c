//! Certified extraction of Sidon and B₂[g] subsets.
//!
//! From any finite set of integers (or rational points in ℝᴺ) the pipeline
//! produces a subset of size ≈ √n/(3√3) in which all pair sums are distinct
//! (Sidon), or at most g-fold repeated (B₂[g]), together with a certificate:
//!
//! 1. pick m = g(p²+p+1) ≈ 3n with p prime ([`extract::choose_modulus`]);
//! 2. compress A into Z_m through a random injective Freiman 2-morphism
//!    ([`compress`]);
//! 3. cover Z_m by p+1 Sidon (resp. B₂[g]) blocks built from a Singer
//!    perfect difference set ([`singer`]);
//! 4. pigeonhole the compressed image onto its best block and pull the
//!    winners back through the stored injection ([`extract`]);
//! 5. re-verify everything from scratch ([`verify`]).
//!
//! Rational point sets reduce to the integer case by random integer
//! projection and exact denominator clearing ([`geometry`]). A
//! branch-and-bound [`oracle`] supplies exact optima at desk scale.
//!
//! Every random choice derives from one master seed through fixed stream
//! ids, and all cross-trial reductions are deterministic, so results are
//! byte-identical across thread counts and across the `parallel` feature
//! (enabled by default; disabling it removes the rayon dependency).

pub mod compress;
mod exec;
pub mod extract;
pub mod geometry;
pub mod gfield;
pub mod oracle;
pub mod primes;
pub mod report;
pub mod seeding;
pub mod singer;
pub mod verify;

pub use compress::{
    compress, compress_k, compress_k_seq, compress_seq, CompressError, CompressionResult, Theta,
};
pub use extract::{
    choose_modulus, extract_b2g, extract_sidon, extract_with, pigeonhole_block, CertificateKind,
    ExtractError, ExtractionReport, ModulusChoice,
};
pub use geometry::{
    check_points_b2g, check_points_sidon, project, pullback_points, rationalize, GeometryError,
    PointSet, ReductionCertificate,
};
pub use gfield::{make_field, CubicElem, CubicFieldContext, FieldError};
pub use oracle::{max_b2g, max_sidon, OracleResult};
pub use singer::{
    lifted_cover, sidon_cover, singer_difference_set, B2gCover, PlanarDifferenceSet, SidonCover,
    SingerError,
};
pub use verify::{is_b2g, is_cover, is_freiman2, is_perfect_difference_set, is_sidon, Witness};
