//! Deterministic random-stream derivation.
//!
//! Every randomized stage owns a ChaCha stream addressed by `(seed, stream
//! id)`. Trial t always reads stream `TRIAL_BASE + t`, projection attempt j
//! always reads `PROJECT_BASE + j`, and so on, so results never depend on
//! thread scheduling or on how much randomness another stage consumed.
//! Rerunning with the same seed reproduces every stream bit for bit.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

const TRIAL_BASE: u64 = 0;
const PROJECT_BASE: u64 = 1 << 40;
const VERIFY_STREAM: u64 = 2 << 40;
const GENERATE_BASE: u64 = 3 << 40;

fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Generator for compression trial `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    stream_rng(seed, TRIAL_BASE + trial)
}

/// Generator for projection attempt `attempt` under `seed`.
///
/// Attempts get fresh streams (not a shared cursor) so the direction drawn
/// at attempt j does not depend on the ambient dimension of earlier draws;
/// zero-padded inputs then project identically in every dimension.
pub fn project_rng(seed: u64, attempt: u64) -> ChaCha12Rng {
    stream_rng(seed, PROJECT_BASE + attempt)
}

/// Generator for sampled-pair certification under `seed`.
pub fn verify_rng(seed: u64) -> ChaCha12Rng {
    stream_rng(seed, VERIFY_STREAM)
}

/// Generator for synthetic data generation (bench families, fixtures).
pub fn generate_rng(seed: u64, index: u64) -> ChaCha12Rng {
    stream_rng(seed, GENERATE_BASE + index)
}

/// Derives an independent child seed (splitmix64 round); used where a whole
/// sub-run (e.g. one bench instance) needs its own seed space.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
