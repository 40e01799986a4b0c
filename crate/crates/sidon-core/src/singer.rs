//! Singer perfect difference sets and the coverings they induce.
//!
//! With α primitive in GF(q³) and N = q²+q+1, the set
//! D = { i mod N : α^i ∈ span{1, α} } has q+1 elements, and every nonzero
//! residue mod N is an ordered difference d − d′ of elements of D exactly
//! once. Exponents are well defined mod N because α^N has order q−1, i.e. it
//! generates the base-field scalars, which fix the plane span{1, α}.
//!
//! The q+1 translates D − d are each Sidon in Z_N (a pair-sum collision
//! would give a repeated difference) and cover Z_N: a nonzero residue r
//! equals d′ − d for exactly one ordered pair, so it lies in exactly the one
//! translate D − d, while 0 lies in all of them. Pulling the translates back
//! through Z_{gN} → Z_N yields q+1 blocks of size g(q+1) that are B₂[g] in
//! Z_{gN} and cover it.
//!
//! Every object is certified by brute force at construction time; the types
//! in this module only exist in certified form.

use crate::gfield::{cubic_mul, make_field, FieldError};
use crate::verify::{is_cover, is_perfect_difference_set, ResidueScratch, Witness};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SingerError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("construction failed certification: {0}")]
    CertificationFailed(String),
}

/// A (q²+q+1, q+1, 1) difference set in Z_N, exhaustively certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDifferenceSet {
    q: u64,
    modulus: u64,
    elements: Vec<u64>,
}

impl PlanarDifferenceSet {
    pub fn q(&self) -> u64 {
        self.q
    }

    /// N = q² + q + 1.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The q+1 residues, sorted ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }
}

/// q+1 Sidon blocks of size q+1 covering Z_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidonCover {
    q: u64,
    modulus: u64,
    blocks: Vec<Vec<u64>>,
}

impl SidonCover {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Blocks ordered by the sorted difference set they are translates of;
    /// elements sorted ascending.
    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }
}

/// q+1 B₂[g] blocks of size g(q+1) covering Z_{gN}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B2gCover {
    q: u64,
    g: u64,
    modulus: u64,
    blocks: Vec<Vec<u64>>,
}

impl B2gCover {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    /// g·(q² + q + 1).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }
}

/// Builds and certifies the Singer difference set for prime q. O(N) field
/// multiplications to build, O(q²) to certify.
pub fn singer_difference_set(q: u64) -> Result<PlanarDifferenceSet, SingerError> {
    let ctx = make_field(q)?;
    let n = q * q + q + 1;
    let alpha = ctx.primitive();
    let mut elements = Vec::with_capacity(q as usize + 1);
    let mut cur = crate::gfield::CubicElem::ONE;
    for i in 0..n {
        if cur.c2 == 0 {
            elements.push(i);
        }
        cur = cubic_mul(&ctx, cur, alpha);
    }
    if elements.len() as u64 != q + 1 {
        return Err(SingerError::CertificationFailed(format!(
            "expected {} plane exponents, found {}",
            q + 1,
            elements.len()
        )));
    }
    is_perfect_difference_set(&elements, n).map_err(cert_err)?;
    Ok(PlanarDifferenceSet {
        q,
        modulus: n,
        elements,
    })
}

/// The q+1 translates {D − d : d ∈ D}, certified as a cover of Z_N by Sidon
/// blocks.
pub fn sidon_cover(d: &PlanarDifferenceSet) -> Result<SidonCover, SingerError> {
    let n = d.modulus;
    let blocks = translate_blocks(&d.elements, n);
    is_cover(&blocks, n).map_err(cert_err)?;
    certify_blocks(&blocks, n, |scratch, b| scratch.is_sidon_block(b))?;
    Ok(SidonCover {
        q: d.q,
        modulus: n,
        blocks,
    })
}

/// Full preimages of the Sidon blocks under Z_{gN} → Z_N, certified as a
/// cover of Z_{gN} by B₂[g] blocks. g = 1 reproduces [`sidon_cover`].
pub fn lifted_cover(d: &PlanarDifferenceSet, g: u64) -> Result<B2gCover, SingerError> {
    assert!(g >= 1, "g must be at least 1");
    let n = d.modulus;
    let gn = g.checked_mul(n).expect("g·N fits u64");
    let blocks: Vec<Vec<u64>> = translate_blocks(&d.elements, n)
        .into_iter()
        .map(|block| {
            let mut lifted: Vec<u64> =
                (0..g).flat_map(|t| block.iter().map(move |&x| x + t * n)).collect();
            lifted.sort_unstable();
            lifted
        })
        .collect();
    for block in &blocks {
        if block.len() as u64 != g * (d.q + 1) {
            return Err(SingerError::CertificationFailed(format!(
                "lifted block has size {}, expected {}",
                block.len(),
                g * (d.q + 1)
            )));
        }
    }
    is_cover(&blocks, gn).map_err(cert_err)?;
    certify_blocks(&blocks, gn, |scratch, b| scratch.is_b2g_block(b, g))?;
    Ok(B2gCover {
        q: d.q,
        g,
        modulus: gn,
        blocks,
    })
}

fn translate_blocks(elements: &[u64], n: u64) -> Vec<Vec<u64>> {
    elements
        .iter()
        .map(|&d| {
            let mut block: Vec<u64> = elements.iter().map(|&x| (x + n - d) % n).collect();
            block.sort_unstable();
            block
        })
        .collect()
}

fn cert_err(w: Witness) -> SingerError {
    SingerError::CertificationFailed(w.to_string())
}

/// Runs `check` over every block, in parallel when the `parallel` feature is
/// on; fails with the lowest-indexed offending block either way.
fn certify_blocks<F>(blocks: &[Vec<u64>], modulus: u64, check: F) -> Result<(), SingerError>
where
    F: Fn(&mut ResidueScratch, &[u64]) -> Result<(), Witness> + Sync,
{
    #[cfg(feature = "parallel")]
    let results: Vec<Result<(), Witness>> = {
        use rayon::prelude::*;
        blocks
            .par_iter()
            .map_init(|| ResidueScratch::new(modulus), |scratch, b| check(scratch, b))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<(), Witness>> = {
        let mut scratch = ResidueScratch::new(modulus);
        blocks.iter().map(|b| check(&mut scratch, b)).collect()
    };
    match results.into_iter().enumerate().find(|(_, r)| r.is_err()) {
        Some((i, Err(w))) => Err(SingerError::CertificationFailed(format!("block {i}: {w}"))),
        _ => Ok(()),
    }
}
