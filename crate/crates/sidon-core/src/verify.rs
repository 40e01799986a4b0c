//! Ground-truth certifiers: Sidon / B₂[g] membership, Freiman 2-morphism
//! identity, perfect difference sets, and coverings.
//!
//! A set is Sidon when all sums of two elements, doubles a+a included, are
//! pairwise distinct; B₂[g] relaxes this to at most g unordered
//! representations {x,y} per sum value. Every rejection returns a [`Witness`]
//! whose elements reproduce the violated equation, so counterexamples are
//! self-validating.
//!
//! The certifiers here are the defensive backstop of the extraction pipeline
//! and the backbone of its tests; they share no code with the constructions
//! they check.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::compress::Theta;
use crate::seeding::verify_rng;

/// Pair-identity checks run over all pairs up to this many elements.
pub const FULL_SCAN_LIMIT: usize = 10_000;
/// Beyond [`FULL_SCAN_LIMIT`], this many seeded random pairs are checked.
pub const SAMPLED_PAIRS: usize = 100_000;
/// Sidon/B₂[g] checks buffer all pair sums up to this many elements; larger
/// sets stream sums in ascending order with O(n) memory.
const IN_MEMORY_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// x + y = z + t with {x,y} ≠ {z,t}.
    SidonViolation {
        x: BigInt,
        y: BigInt,
        z: BigInt,
        t: BigInt,
    },
    /// A sum with more than g unordered representations; carries g+1 of them.
    B2gViolation {
        sum: BigInt,
        pairs: Vec<(BigInt, BigInt)>,
    },
    /// (φ(a) + φ(b)) mod m ≠ φ(a+b): lhs is the image-side sum, rhs the
    /// recomputed ⌊(a+b)mθ⌋ mod m.
    MorphismViolation {
        a: BigInt,
        b: BigInt,
        m: u64,
        lhs: u64,
        rhs: u64,
    },
    /// Smallest residue missed by the blocks.
    CoverGap { residue: u64 },
    /// A nonzero residue hit `count` times as an ordered difference; `pairs`
    /// holds the first two (minuend, subtrahend) hits when count ≥ 2.
    DifferenceDefect {
        delta: u64,
        count: u64,
        pairs: Vec<(u64, u64)>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SidonViolation { x, y, z, t } => {
                write!(f, "sidon violation: {x} + {y} = {z} + {t}")
            }
            Witness::B2gViolation { sum, pairs } => {
                write!(f, "B2[g] violation: sum {sum} has {} representations:", pairs.len())?;
                for (a, b) in pairs {
                    write!(f, " {a}+{b}")?;
                }
                Ok(())
            }
            Witness::MorphismViolation { a, b, m, lhs, rhs } => write!(
                f,
                "morphism violation at ({a}, {b}): image sum {lhs} != {rhs} = phi(a+b) (mod {m})"
            ),
            Witness::CoverGap { residue } => {
                write!(f, "cover gap: residue {residue} is uncovered")
            }
            Witness::DifferenceDefect { delta, count, pairs } => {
                write!(f, "difference defect: residue {delta} occurs {count} times")?;
                if !pairs.is_empty() {
                    write!(f, ":")?;
                    for (a, b) in pairs {
                        write!(f, " {a}-{b}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Sidon check over Z, or over Z_m when a modulus is given (the modular
/// statement is stronger). Values are reduced and deduplicated first.
pub fn is_sidon(s: &[BigInt], modulus: Option<&BigInt>) -> Result<(), Witness> {
    let v = prepare(s, modulus);
    match sidon_witness(&v, modulus, IN_MEMORY_LIMIT) {
        None => Ok(()),
        Some(((k, l), (i, j))) => Err(Witness::SidonViolation {
            x: v[k].clone(),
            y: v[l].clone(),
            z: v[i].clone(),
            t: v[j].clone(),
        }),
    }
}

/// B₂[g] check: at most g unordered representations per sum, doubles counted
/// as one representation. g = 1 coincides with [`is_sidon`].
pub fn is_b2g(s: &[BigInt], g: u64, modulus: Option<&BigInt>) -> Result<(), Witness> {
    assert!(g >= 1, "g must be at least 1");
    let v = prepare(s, modulus);
    match b2g_witness(&v, g, modulus, IN_MEMORY_LIMIT) {
        None => Ok(()),
        Some((sum, pairs)) => Err(Witness::B2gViolation {
            sum,
            pairs: pairs
                .into_iter()
                .map(|(i, j)| (v[i].clone(), v[j].clone()))
                .collect(),
        }),
    }
}

/// Checks the no-carry identity (image(a)+image(b)) mod m = ⌊(a+b)mθ⌋ mod m
/// over all pairs (≤ [`FULL_SCAN_LIMIT`] elements) or [`SAMPLED_PAIRS`]
/// seeded pairs; the identity implies the Freiman 2-morphism property.
pub fn is_freiman2(
    kept: &[BigInt],
    image: &[u64],
    theta: &Theta,
    m: u64,
    seed: u64,
) -> Result<(), Witness> {
    assert_eq!(kept.len(), image.len(), "kept and image must be aligned");
    let n = kept.len();
    if n == 0 {
        return Ok(());
    }
    let mbig = BigInt::from(m);
    let scaled = &mbig * theta.value().numer();
    let den = theta.value().denom();
    // t_i = a_i·m·num, so ⌊(a_i+a_j)mθ⌋ = (t_i + t_j) div den.
    let t: Vec<BigInt> = kept.iter().map(|a| a * &scaled).collect();
    let check = |i: usize, j: usize| -> Result<(), Witness> {
        let lhs = ((image[i] as u128 + image[j] as u128) % m as u128) as u64;
        let rhs = (&t[i] + &t[j])
            .div_floor(den)
            .mod_floor(&mbig)
            .to_u64()
            .expect("residue fits u64");
        if lhs == rhs {
            Ok(())
        } else {
            Err(Witness::MorphismViolation {
                a: kept[i].clone(),
                b: kept[j].clone(),
                m,
                lhs,
                rhs,
            })
        }
    };
    if n <= FULL_SCAN_LIMIT {
        for i in 0..n {
            for j in i..n {
                check(i, j)?;
            }
        }
    } else {
        let mut rng = verify_rng(seed);
        for _ in 0..SAMPLED_PAIRS {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            check(i, j)?;
        }
    }
    Ok(())
}

/// Perfect (planar) difference set check: every nonzero residue mod `modulus`
/// arises exactly once as an ordered difference d − d′.
pub fn is_perfect_difference_set(d: &[u64], modulus: u64) -> Result<(), Witness> {
    debug_assert!(d.iter().all(|&x| x < modulus));
    let mut count = vec![0u32; modulus as usize];
    let mut first_repeat: Option<u64> = None;
    'scan: for (i, j) in ordered_difference_pairs(d.len()) {
        let delta = (d[i] + modulus - d[j]) % modulus;
        count[delta as usize] += 1;
        if count[delta as usize] == 2 {
            first_repeat = Some(delta);
            break 'scan;
        }
    }
    if let Some(delta) = first_repeat {
        let mut pairs = Vec::with_capacity(2);
        for (i, j) in ordered_difference_pairs(d.len()) {
            if (d[i] + modulus - d[j]) % modulus == delta {
                pairs.push((d[i], d[j]));
                if pairs.len() == 2 {
                    break;
                }
            }
        }
        return Err(Witness::DifferenceDefect {
            delta,
            count: 2,
            pairs,
        });
    }
    for delta in 1..modulus {
        if count[delta as usize] == 0 {
            return Err(Witness::DifferenceDefect {
                delta,
                count: 0,
                pairs: Vec::new(),
            });
        }
    }
    Ok(())
}

/// Ordered index pairs (i, j), i ≠ j, with the positive-gap direction
/// (larger index minus smaller) scanned first. On sorted input this reports
/// small positive differences before their mod-m complements.
fn ordered_difference_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    let forward = (0..n).flat_map(move |j| (j + 1..n).map(move |i| (i, j)));
    let backward = (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    forward.chain(backward)
}

/// Union-equals-Z_modulus check; witness is the smallest uncovered residue.
pub fn is_cover(blocks: &[Vec<u64>], modulus: u64) -> Result<(), Witness> {
    let mut hit = vec![false; modulus as usize];
    for block in blocks {
        for &r in block {
            debug_assert!(r < modulus);
            hit[r as usize] = true;
        }
    }
    match hit.iter().position(|&h| !h) {
        Some(r) => Err(Witness::CoverGap { residue: r as u64 }),
        None => Ok(()),
    }
}

/// Reusable counting table for residue-set checks mod a fixed modulus,
/// generation-stamped so repeated block certifications skip re-zeroing.
pub(crate) struct ResidueScratch {
    modulus: u64,
    stamp: Vec<u32>,
    count: Vec<u32>,
    gen: u32,
}

impl ResidueScratch {
    pub(crate) fn new(modulus: u64) -> Self {
        ResidueScratch {
            modulus,
            stamp: vec![0; modulus as usize],
            count: vec![0; modulus as usize],
            gen: 0,
        }
    }

    fn begin(&mut self) {
        if self.gen == u32::MAX {
            self.stamp.fill(0);
            self.gen = 0;
        }
        self.gen += 1;
    }

    fn bump(&mut self, key: u64) -> u32 {
        let k = key as usize;
        if self.stamp[k] != self.gen {
            self.stamp[k] = self.gen;
            self.count[k] = 1;
        } else {
            self.count[k] += 1;
        }
        self.count[k]
    }

    /// Sidon check for a residue block mod the scratch modulus, doubles
    /// included.
    pub(crate) fn is_sidon_block(&mut self, block: &[u64]) -> Result<(), Witness> {
        match self.b2g_scan(block, 1) {
            None => Ok(()),
            Some((_, pairs)) => Err(Witness::SidonViolation {
                x: BigInt::from(pairs[0].0),
                y: BigInt::from(pairs[0].1),
                z: BigInt::from(pairs[1].0),
                t: BigInt::from(pairs[1].1),
            }),
        }
    }

    /// B₂[g] check for a residue block mod the scratch modulus.
    pub(crate) fn is_b2g_block(&mut self, block: &[u64], g: u64) -> Result<(), Witness> {
        match self.b2g_scan(block, g) {
            None => Ok(()),
            Some((sum, pairs)) => Err(Witness::B2gViolation {
                sum: BigInt::from(sum),
                pairs: pairs
                    .into_iter()
                    .map(|(a, b)| (BigInt::from(a), BigInt::from(b)))
                    .collect(),
            }),
        }
    }

    fn b2g_scan(&mut self, block: &[u64], g: u64) -> Option<(u64, Vec<(u64, u64)>)> {
        self.begin();
        let m = self.modulus;
        let mut offender = None;
        'scan: for (i, j) in pair_scan_order(block.len()) {
            let s = (block[i] + block[j]) % m;
            if self.bump(s) as u64 > g {
                offender = Some(s);
                break 'scan;
            }
        }
        let s = offender?;
        let mut pairs = Vec::with_capacity(g as usize + 1);
        for (i, j) in pair_scan_order(block.len()) {
            if (block[i] + block[j]) % m == s {
                pairs.push((block[i], block[j]));
                if pairs.len() as u64 == g + 1 {
                    break;
                }
            }
        }
        Some((s, pairs))
    }
}

/// Index pairs i ≤ j with distinct pairs in lexicographic order first and
/// doubles (i, i) last; fixes which witness a failing check reports.
fn pair_scan_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n)
        .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
        .chain((0..n).map(|i| (i, i)))
}

fn prepare(s: &[BigInt], modulus: Option<&BigInt>) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = match modulus {
        Some(m) => s.iter().map(|x| x.mod_floor(m)).collect(),
        None => s.to_vec(),
    };
    v.sort();
    v.dedup();
    v
}

/// All values as i128 with headroom for one addition.
fn narrow(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter()
        .map(|x| x.to_i128().filter(|y| y.unsigned_abs() <= u128::MAX / 4))
        .collect()
}

fn sidon_witness(
    v: &[BigInt],
    modulus: Option<&BigInt>,
    limit: usize,
) -> Option<((usize, usize), (usize, usize))> {
    let n = v.len();
    if let Some(ints) = narrow(v) {
        match modulus.and_then(|m| m.to_i128()) {
            Some(m) => hash_scan_sidon(n, |i, j| (ints[i] + ints[j]).rem_euclid(m)),
            None if n > limit => merge_scan(n, |i, j| ints[i] + ints[j], 1)
                .map(|(_, pairs)| (pairs[0], pairs[1])),
            None => hash_scan_sidon(n, |i, j| ints[i] + ints[j]),
        }
    } else {
        match modulus {
            Some(m) => hash_scan_sidon(n, |i, j| (&v[i] + &v[j]).mod_floor(m)),
            None if n > limit => merge_scan(n, |i, j| &v[i] + &v[j], 1)
                .map(|(_, pairs)| (pairs[0], pairs[1])),
            None => hash_scan_sidon(n, |i, j| &v[i] + &v[j]),
        }
    }
}

fn b2g_witness(
    v: &[BigInt],
    g: u64,
    modulus: Option<&BigInt>,
    limit: usize,
) -> Option<(BigInt, Vec<(usize, usize)>)> {
    let n = v.len();
    if let Some(ints) = narrow(v) {
        let lift = |r: Option<(i128, Vec<(usize, usize)>)>| {
            r.map(|(s, pairs)| (BigInt::from(s), pairs))
        };
        match modulus.and_then(|m| m.to_i128()) {
            Some(m) => lift(hash_scan_b2g(n, |i, j| (ints[i] + ints[j]).rem_euclid(m), g)),
            None if n > limit => lift(merge_scan(n, |i, j| ints[i] + ints[j], g)),
            None => lift(hash_scan_b2g(n, |i, j| ints[i] + ints[j], g)),
        }
    } else {
        match modulus {
            Some(m) => hash_scan_b2g(n, |i, j| (&v[i] + &v[j]).mod_floor(m), g),
            None if n > limit => merge_scan(n, |i, j| &v[i] + &v[j], g),
            None => hash_scan_b2g(n, |i, j| &v[i] + &v[j], g),
        }
    }
}

/// First colliding pair of pair-sums in [`pair_scan_order`]; returns
/// (earlier pair, later pair).
fn hash_scan_sidon<K: Eq + Hash>(
    n: usize,
    sum: impl Fn(usize, usize) -> K,
) -> Option<((usize, usize), (usize, usize))> {
    let mut seen: HashMap<K, (usize, usize)> =
        HashMap::with_capacity((n * (n + 1) / 2).min(1 << 20));
    for (i, j) in pair_scan_order(n) {
        match seen.entry(sum(i, j)) {
            Entry::Occupied(e) => return Some((*e.get(), (i, j))),
            Entry::Vacant(slot) => {
                slot.insert((i, j));
            }
        }
    }
    None
}

/// First sum reaching g+1 representations in [`pair_scan_order`], with those
/// g+1 pairs.
fn hash_scan_b2g<K: Clone + Eq + Hash>(
    n: usize,
    sum: impl Fn(usize, usize) -> K,
    g: u64,
) -> Option<(K, Vec<(usize, usize)>)> {
    let mut reps: HashMap<K, Vec<(usize, usize)>> =
        HashMap::with_capacity((n * (n + 1) / 2).min(1 << 20));
    for (i, j) in pair_scan_order(n) {
        let key = sum(i, j);
        let pairs = reps.entry(key.clone()).or_default();
        pairs.push((i, j));
        if pairs.len() as u64 > g {
            return Some((key, pairs.clone()));
        }
    }
    None
}

/// Streaming tier: n-way merge of the ascending rows {v[i]+v[j] : j ≥ i}
/// (v sorted), O(n) memory. Reports the first sum, in ascending order, with
/// more than g representations; doubles are interleaved by sum value here,
/// so witnesses can differ from the buffered tier (validity never does).
fn merge_scan<K: Ord>(
    n: usize,
    sum: impl Fn(usize, usize) -> K,
    g: u64,
) -> Option<(K, Vec<(usize, usize)>)> {
    let mut heap: BinaryHeap<Reverse<(K, usize, usize)>> =
        (0..n).map(|i| Reverse((sum(i, i), i, i))).collect();
    let mut run: Option<(K, Vec<(usize, usize)>)> = None;
    while let Some(Reverse((s, i, j))) = heap.pop() {
        if j + 1 < n {
            heap.push(Reverse((sum(i, j + 1), i, j + 1)));
        }
        run = match run {
            Some((prev, mut pairs)) if prev == s => {
                pairs.push((i, j));
                if pairs.len() as u64 > g {
                    return Some((prev, pairs));
                }
                Some((prev, pairs))
            }
            _ => Some((s, vec![(i, j)])),
        };
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn accepts_textbook_sidon_set() {
        assert_eq!(is_sidon(&ints(&[1, 2, 5, 11]), None), Ok(()));
    }

    #[test]
    fn reports_distinct_pair_collision() {
        let w = is_sidon(&ints(&[1, 2, 3, 4]), None).unwrap_err();
        assert_eq!(
            w,
            Witness::SidonViolation {
                x: 1.into(),
                y: 4.into(),
                z: 2.into(),
                t: 3.into(),
            }
        );
    }

    #[test]
    fn doubles_count_as_sums() {
        let w = is_sidon(&ints(&[0, 1, 2]), None).unwrap_err();
        assert_eq!(
            w,
            Witness::SidonViolation {
                x: 0.into(),
                y: 2.into(),
                z: 1.into(),
                t: 1.into(),
            }
        );
    }

    #[test]
    fn witness_equation_reverifies() {
        for set in [&[0i64, 1, 2][..], &[1, 2, 3, 4], &[5, 9, 13, 17]] {
            if let Err(Witness::SidonViolation { x, y, z, t }) = is_sidon(&ints(set), None) {
                assert_eq!(&x + &y, &z + &t);
                let mut lhs = [x, y];
                let mut rhs = [z, t];
                lhs.sort();
                rhs.sort();
                assert_ne!(lhs, rhs, "trivial solution reported as witness");
            } else {
                panic!("expected a violation for {set:?}");
            }
        }
    }

    #[test]
    fn b2g_counts_unordered_representations() {
        let s = ints(&[0, 1, 2, 4]);
        assert_eq!(is_b2g(&s, 2, None), Ok(()));
        let w = is_b2g(&s, 1, None).unwrap_err();
        assert_eq!(
            w,
            Witness::B2gViolation {
                sum: 2.into(),
                pairs: vec![(0.into(), 2.into()), (1.into(), 1.into())],
            }
        );
    }

    #[test]
    fn modular_context_is_stronger() {
        let s = ints(&[0, 1, 3]);
        assert_eq!(is_sidon(&s, None), Ok(()));
        assert_eq!(is_sidon(&s, Some(&BigInt::from(7))), Ok(()));
        // 3 + 3 = 6 ≡ 1 = 0 + 1 (mod 5)
        let w = is_sidon(&s, Some(&BigInt::from(5))).unwrap_err();
        assert_eq!(
            w,
            Witness::SidonViolation {
                x: 0.into(),
                y: 1.into(),
                z: 3.into(),
                t: 3.into(),
            }
        );
    }

    #[test]
    fn streaming_tier_agrees_with_buffered_tier() {
        // limit 4 forces the heap-merge path on these 8-element inputs
        let sidon = ints(&[0, 1, 3, 7, 12, 20, 30, 44]);
        assert_eq!(sidon_witness(&sidon, None, 4), None);
        let bad = ints(&[0, 1, 3, 7, 12, 20, 30, 31]);
        let streamed = sidon_witness(&bad, None, 4).expect("0+31 = 1+30");
        let buffered = sidon_witness(&bad, None, 4096).expect("0+31 = 1+30");
        let eval = |((k, l), (i, j)): ((usize, usize), (usize, usize))| {
            (&bad[k] + &bad[l], &bad[i] + &bad[j])
        };
        let (a, b) = eval(streamed);
        assert_eq!(a, b);
        let (c, d) = eval(buffered);
        assert_eq!(c, d);
    }

    #[test]
    fn freiman_identity_on_exact_multiples() {
        let m = 31u64;
        let theta = Theta::from_ratio(BigInt::from(1), BigInt::from(m));
        let kept: Vec<BigInt> = (0..m as i64).map(BigInt::from).collect();
        let image: Vec<u64> = (0..m).collect();
        assert_eq!(is_freiman2(&kept, &image, &theta, m, 0), Ok(()));
    }

    #[test]
    fn corrupted_image_is_caught() {
        let m = 31u64;
        let theta = Theta::from_ratio(BigInt::from(1), BigInt::from(m));
        let kept: Vec<BigInt> = (0..m as i64).map(BigInt::from).collect();
        let mut image: Vec<u64> = (0..m).collect();
        image[7] = (image[7] + 1) % m;
        let w = is_freiman2(&kept, &image, &theta, m, 0).unwrap_err();
        match w {
            Witness::MorphismViolation { a, b, .. } => {
                assert!(a == BigInt::from(7) || b == BigInt::from(7));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn perfect_difference_sets_mod_7_and_13() {
        assert_eq!(is_perfect_difference_set(&[1, 2, 4], 7), Ok(()));
        assert_eq!(is_perfect_difference_set(&[0, 1, 3, 9], 13), Ok(()));
        let w = is_perfect_difference_set(&[0, 1, 2], 7).unwrap_err();
        assert_eq!(
            w,
            Witness::DifferenceDefect {
                delta: 1,
                count: 2,
                pairs: vec![(1, 0), (2, 1)],
            }
        );
    }

    #[test]
    fn cover_gap_is_smallest_uncovered() {
        let full = vec![(0..7).collect::<Vec<u64>>()];
        assert_eq!(is_cover(&full, 7), Ok(()));
        let blocks = vec![vec![0, 1, 3], vec![0, 6, 2], vec![0, 4, 5]];
        assert_eq!(is_cover(&blocks, 7), Ok(()));
        let dropped = &blocks[..2];
        assert_eq!(
            is_cover(dropped, 7),
            Err(Witness::CoverGap { residue: 4 })
        );
    }

    #[test]
    fn residue_scratch_matches_public_verifier() {
        let mut scratch = ResidueScratch::new(7);
        assert_eq!(scratch.is_sidon_block(&[0, 1, 3]), Ok(()));
        assert!(scratch.is_sidon_block(&[0, 1, 2]).is_err());
        let mut wide = ResidueScratch::new(100);
        assert_eq!(wide.is_b2g_block(&[0, 1, 2, 4], 2), Ok(()));
        assert!(wide.is_b2g_block(&[0, 1, 2, 4], 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn b2g_with_g1_matches_sidon(raw in prop::collection::btree_set(-500i64..500, 1..14)) {
            let s = ints(&raw.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(is_sidon(&s, None).is_ok(), is_b2g(&s, 1, None).is_ok());
        }

        #[test]
        fn sidon_is_affine_invariant(raw in prop::collection::btree_set(-1000i64..1000, 1..14)) {
            let s = ints(&raw.iter().copied().collect::<Vec<_>>());
            let mapped: Vec<BigInt> = s.iter().map(|x| x * 7 + 3).collect();
            prop_assert_eq!(is_sidon(&s, None).is_ok(), is_sidon(&mapped, None).is_ok());
        }

        #[test]
        fn tiers_agree_on_acceptance(raw in prop::collection::btree_set(0i64..60, 5..20), g in 1u64..3) {
            let s = ints(&raw.iter().copied().collect::<Vec<_>>());
            let buffered = b2g_witness(&s, g, None, 4096).is_none();
            let streamed = b2g_witness(&s, g, None, 1).is_none();
            prop_assert_eq!(buffered, streamed);
        }
    }
}
