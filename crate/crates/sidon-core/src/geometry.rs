//! Reduction of rational point sets in ℝᴺ to integer sets, preserving all
//! Sidon/B₂[g] structure in both directions, and the pullback of extraction
//! results to the original points.
//!
//! A random integer direction u separates n distinct points with probability
//! ≥ 1 − C(n,2)/(2B)ᴺ when drawn from [−B, B]ᴺ, and x+y = z+t is preserved
//! by the linear map x ↦ ⟨x, u⟩. Because machine inputs are rational,
//! clearing the least common denominator then preserves the equation in both
//! directions exactly (Sidon's equation is homogeneous), with no grid
//! approximation and no error term: the integer set is Sidon iff the
//! projected values are, iff the chosen points are.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::Rng;

use crate::seeding::project_rng;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("points {0} and {1} are identical")]
    DuplicatePoint(usize, usize),
    #[error("value {0} is not among the reduced integers")]
    UnknownValue(BigInt),
}

/// n pairwise-distinct points with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<BigRational>>) -> Result<PointSet, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyPointSet);
        }
        let dim = points[0].len();
        assert!(dim >= 1, "points need at least one coordinate");
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    index,
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&i, &j| points[i].cmp(&points[j]));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(GeometryError::DuplicatePoint(
                    w[0].min(w[1]),
                    w[0].max(w[1]),
                ));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sets
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }
}

/// Proof-carrying reduction of a point set to integers: the direction, the
/// exact dot products, and the denominator-cleared integer images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub direction: Vec<BigInt>,
    /// ⟨xᵢ, direction⟩, aligned with the point set.
    pub projected: Vec<BigRational>,
    /// Least common multiple of the projected denominators.
    pub common_denominator: BigInt,
    /// integers[i] = projected[i]·common_denominator, pairwise distinct.
    pub integers: Vec<BigInt>,
    /// Smallest gap between sorted projected values; None for a single point.
    pub min_gap: Option<BigRational>,
}

/// Finds an integer direction with all n dot products pairwise distinct.
/// Draws from [−B, B]ᴺ with B doubling from 2n², one fresh stream per
/// attempt (so the draw for coordinate 1 does not depend on the ambient
/// dimension); after 64 failures falls back to a deterministic base-M digit
/// direction.
pub fn project(ps: &PointSet, seed: u64) -> ReductionCertificate {
    let n = ps.len() as i128;
    let mut b: i128 = 2 * n * n;
    for attempt in 0..64u64 {
        let mut rng = project_rng(seed, attempt);
        let dir: Vec<BigInt> = (0..ps.dim())
            .map(|_| BigInt::from(rng.gen_range(-b..=b)))
            .collect();
        if let Some(cert) = try_direction(ps, dir) {
            return cert;
        }
        b = b.saturating_mul(2);
    }
    try_direction(ps, fallback_direction(ps))
        .expect("base-M digit direction separates distinct points")
}

/// Clears denominators: returns (lcm of denominators, values·lcm). Since
/// the map is multiplication by a positive constant, x+y = z+t holds among
/// the integers iff it holds among the values.
pub fn rationalize(values: &[BigRational]) -> (BigInt, Vec<BigInt>) {
    let mut den = BigInt::one();
    for v in values {
        den = den.lcm(v.denom());
    }
    let integers = values
        .iter()
        .map(|v| v.numer() * (&den / v.denom()))
        .collect();
    (den, integers)
}

/// The original points whose reduced integers lie in `chosen`, in the order
/// of `chosen`.
pub fn pullback_points(
    ps: &PointSet,
    cert: &ReductionCertificate,
    chosen: &[BigInt],
) -> Result<Vec<Vec<BigRational>>, GeometryError> {
    let index: HashMap<&BigInt, usize> = cert
        .integers
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    chosen
        .iter()
        .map(|v| {
            index
                .get(v)
                .map(|&i| ps.points()[i].clone())
                .ok_or_else(|| GeometryError::UnknownValue(v.clone()))
        })
        .collect()
}

/// B₂[g] check by exact vector arithmetic: at most g unordered pairs per
/// vector sum, doubles included. On failure returns g+1 index pairs sharing
/// one sum.
pub fn check_points_b2g(
    points: &[Vec<BigRational>],
    g: u64,
) -> Result<(), Vec<(usize, usize)>> {
    assert!(g >= 1);
    let n = points.len();
    let mut reps: HashMap<Vec<BigRational>, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..n {
        for j in i..n {
            let sum: Vec<BigRational> = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| a + b)
                .collect();
            let pairs = reps.entry(sum).or_default();
            pairs.push((i, j));
            if pairs.len() as u64 > g {
                return Err(pairs.clone());
            }
        }
    }
    Ok(())
}

/// Sidon check on exact rational vectors; [`check_points_b2g`] with g = 1.
pub fn check_points_sidon(points: &[Vec<BigRational>]) -> Result<(), Vec<(usize, usize)>> {
    check_points_b2g(points, 1)
}

fn try_direction(ps: &PointSet, direction: Vec<BigInt>) -> Option<ReductionCertificate> {
    let projected: Vec<BigRational> = ps
        .points()
        .iter()
        .map(|p| {
            p.iter()
                .zip(&direction)
                .map(|(x, u)| x * BigRational::from(u.clone()))
                .sum()
        })
        .collect();
    let mut sorted = projected.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let min_gap = sorted
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min();
    let (common_denominator, integers) = rationalize(&projected);
    Some(ReductionCertificate {
        direction,
        projected,
        common_denominator,
        integers,
        min_gap,
    })
}

/// Deterministic direction (1, M, M², …) with M = 2⌈S/δ⌉ + 2 for coordinate
/// spread S and smallest positive coordinate gap δ; M > S/δ + 1 makes the
/// base-M expansion of coordinate differences injective.
fn fallback_direction(ps: &PointSet) -> Vec<BigInt> {
    let mut coords: Vec<&BigRational> = ps.points().iter().flatten().collect();
    coords.sort();
    let spread = coords[coords.len() - 1] - coords[0];
    let delta = coords
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| d.is_positive())
        .min();
    let m: BigInt = match delta {
        Some(d) => (spread / d).ceil().to_integer() * 2 + 2,
        // all coordinates equal: only possible for a single point
        None => BigInt::from(2),
    };
    (0..ps.dim() as u32).map(|i| m.pow(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn grid(points: &[(i64, i64)]) -> PointSet {
        PointSet::new(
            points
                .iter()
                .map(|&(x, y)| vec![rat(x, 1), rat(y, 1)])
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(PointSet::new(vec![]), Err(GeometryError::EmptyPointSet));
        let bad = PointSet::new(vec![vec![rat(1, 1)], vec![rat(1, 1), rat(2, 1)]]);
        assert_eq!(
            bad,
            Err(GeometryError::DimensionMismatch {
                index: 1,
                expected: 1,
                got: 2
            })
        );
        let dup = PointSet::new(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(3, 1), rat(4, 1)],
            vec![rat(1, 2), rat(0, 1)],
        ]);
        assert_eq!(dup, Err(GeometryError::DuplicatePoint(0, 2)));
    }

    #[test]
    fn unit_square_with_known_directions() {
        let ps = grid(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let good = try_direction(&ps, vec![BigInt::from(1), BigInt::from(2)]).unwrap();
        let expect: Vec<BigInt> = [0, 1, 2, 3].map(BigInt::from).into();
        assert_eq!(good.integers, expect);
        assert_eq!(good.common_denominator, BigInt::one());
        assert_eq!(good.min_gap, Some(rat(1, 1)));
        // (1,0) and (0,1) collide under u = (1,1)
        assert!(try_direction(&ps, vec![BigInt::from(1), BigInt::from(1)]).is_none());
    }

    #[test]
    fn pullback_recovers_the_square_corners() {
        let ps = grid(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let cert = try_direction(&ps, vec![BigInt::from(1), BigInt::from(2)]).unwrap();
        let chosen: Vec<BigInt> = [0, 1, 3].map(BigInt::from).into();
        let points = pullback_points(&ps, &cert, &chosen).unwrap();
        assert_eq!(
            points,
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(1, 1), rat(1, 1)],
            ]
        );
        assert_eq!(check_points_sidon(&points), Ok(()));
        assert_eq!(pullback_points(&ps, &cert, &[]).unwrap(), Vec::<Vec<BigRational>>::new());
        assert_eq!(
            pullback_points(&ps, &cert, &[BigInt::from(9)]),
            Err(GeometryError::UnknownValue(BigInt::from(9)))
        );
    }

    #[test]
    fn denominator_clearing_examples() {
        let (den, ints) = rationalize(&[rat(1, 2), rat(2, 3), rat(5, 6)]);
        assert_eq!(den, BigInt::from(6));
        assert_eq!(ints, [3, 4, 5].map(BigInt::from).to_vec());

        let (den, ints) = rationalize(&[rat(4, 1), rat(7, 1)]);
        assert_eq!(den, BigInt::one());
        assert_eq!(ints, [4, 7].map(BigInt::from).to_vec());

        // 0 + 5/6 = 1/3 + 1/2 transports to 0 + 5 = 2 + 3
        let (den, ints) = rationalize(&[rat(0, 1), rat(1, 3), rat(1, 2), rat(5, 6)]);
        assert_eq!(den, BigInt::from(6));
        assert_eq!(ints, [0, 2, 3, 5].map(BigInt::from).to_vec());
        assert_eq!(&ints[0] + &ints[3], &ints[1] + &ints[2]);
    }

    #[test]
    fn projection_is_seeded_and_exact() {
        let ps = grid(&[(0, 0), (3, 1), (1, 4), (2, 2), (5, 5)]);
        let a = project(&ps, 77);
        let b = project(&ps, 77);
        assert_eq!(a, b);
        let mut ints = a.integers.clone();
        ints.sort();
        ints.dedup();
        assert_eq!(ints.len(), ps.len());
        for (r, v) in a.integers.iter().zip(&a.projected) {
            assert_eq!(
                BigRational::from(r.clone()),
                v * BigRational::from(a.common_denominator.clone())
            );
        }
    }

    #[test]
    fn zero_padding_changes_nothing() {
        let base: Vec<i64> = vec![3, 9, 27, 14, 50, 81];
        let embed = |dim: usize| {
            PointSet::new(
                base.iter()
                    .map(|&x| {
                        let mut p = vec![rat(x, 7)];
                        p.resize(dim, rat(0, 1));
                        p
                    })
                    .collect(),
            )
            .unwrap()
        };
        let one = project(&embed(1), 31);
        for dim in [3usize, 8] {
            let padded = project(&embed(dim), 31);
            assert_eq!(one.integers, padded.integers);
            assert_eq!(one.common_denominator, padded.common_denominator);
            assert_eq!(one.direction[0], padded.direction[0]);
        }
    }

    #[test]
    fn fallback_direction_always_separates() {
        let ps = grid(&[(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
        let cert = try_direction(&ps, fallback_direction(&ps)).unwrap();
        assert_eq!(cert.integers.len(), 6);
        // M = 2·⌈2/1⌉+2 = 6 for spread 2, gap 1
        assert_eq!(cert.direction, vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn vector_checks_count_doubles() {
        // (0,0) + (1,1) = (1,0) + (0,1): not Sidon, but B2[2]
        let square = grid(&[(0, 0), (1, 0), (0, 1), (1, 1)]).points().to_vec();
        let pairs = check_points_sidon(&square).unwrap_err();
        assert_eq!(pairs.len(), 2);
        assert_eq!(check_points_b2g(&square, 2), Ok(()));
    }
}
