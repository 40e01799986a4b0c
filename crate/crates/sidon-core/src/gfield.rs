//! Cubic extension fields GF(q³) over a prime base field.
//!
//! A context carries the base prime q, a monic irreducible cubic modulus
//! (constant-first coefficients), and a certified primitive element, i.e. a
//! generator of the cyclic group GF(q³)* of order q³−1. The Singer
//! construction downstream only needs multiplication, powers, and that
//! certificate.
//!
//! All searches are deterministic: the modulus is the first rootless monic
//! cubic in lexicographic coefficient order, the primitive element is the
//! first generator in lexicographic element order. For cubics, rootless and
//! irreducible coincide (a factorization must contain a linear factor).

use crate::primes::{distinct_prime_factors, is_prime};

/// Largest supported base prime; keeps q³−1 < 2⁶¹ and every coefficient
/// product inside u64.
pub const MAX_Q: u64 = 1 << 20;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("base field order {0} is not prime")]
    CompositeModulus(u64),
    #[error("base field order {0} exceeds the supported bound 2^20")]
    FieldTooLarge(u64),
    #[error("primitive element search exhausted all candidates")]
    ExhaustedCandidates,
}

/// Element c0 + c1·α + c2·α², coefficients reduced mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubicElem {
    pub c0: u64,
    pub c1: u64,
    pub c2: u64,
}

impl CubicElem {
    pub const ZERO: CubicElem = CubicElem { c0: 0, c1: 0, c2: 0 };
    pub const ONE: CubicElem = CubicElem { c0: 1, c1: 0, c2: 0 };

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
}

#[derive(Debug, Clone)]
pub struct CubicFieldContext {
    q: u64,
    /// Monic modulus x³ + p2·x² + p1·x + p0 stored constant-first:
    /// [p0, p1, p2, 1].
    modulus_poly: [u64; 4],
    primitive: CubicElem,
}

impl CubicFieldContext {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus_poly(&self) -> [u64; 4] {
        self.modulus_poly
    }

    pub fn primitive(&self) -> CubicElem {
        self.primitive
    }

    /// Order of the multiplicative group, q³ − 1.
    pub fn group_order(&self) -> u64 {
        self.q * self.q * self.q - 1
    }
}

/// Builds the field context for prime q ≤ 2²⁰: modulus search, primitive
/// search, and certification of both.
pub fn make_field(q: u64) -> Result<CubicFieldContext, FieldError> {
    if q > MAX_Q {
        return Err(FieldError::FieldTooLarge(q));
    }
    if !is_prime(q) {
        return Err(FieldError::CompositeModulus(q));
    }
    let modulus_poly = first_rootless_cubic(q);
    let primitive = find_primitive(q, modulus_poly)?;
    Ok(CubicFieldContext {
        q,
        modulus_poly,
        primitive,
    })
}

pub fn cubic_mul(ctx: &CubicFieldContext, a: CubicElem, b: CubicElem) -> CubicElem {
    mul_raw(ctx.q, &ctx.modulus_poly, a, b)
}

/// a^e by square-and-multiply; a⁰ = 1.
pub fn cubic_pow(ctx: &CubicFieldContext, a: CubicElem, e: u64) -> CubicElem {
    pow_raw(ctx.q, &ctx.modulus_poly, a, e)
}

/// First generator of GF(q³)* in lexicographic element order
/// (c2, c1, c0 as base-q digits, ascending), certified by checking
/// a^((q³−1)/r) ≠ 1 for every prime r | q³−1 and a^(q³−1) = 1.
pub fn find_primitive(q: u64, modulus_poly: [u64; 4]) -> Result<CubicElem, FieldError> {
    let order = q * q * q - 1;
    // q³−1 = (q−1)(q²+q+1); factoring the two parts separately keeps trial
    // division at O(q) instead of O(q^(3/2)).
    let mut factors = distinct_prime_factors(q - 1);
    for r in distinct_prime_factors(q * q + q + 1) {
        if !factors.contains(&r) {
            factors.push(r);
        }
    }
    factors.sort_unstable();

    for v in 1..q * q * q {
        let cand = CubicElem {
            c0: v % q,
            c1: (v / q) % q,
            c2: v / (q * q),
        };
        // Base-field scalars generate a subgroup of order dividing q−1 and
        // can never be primitive; skipping them does not change which
        // element is found first.
        if cand.c1 == 0 && cand.c2 == 0 {
            continue;
        }
        let ok = factors
            .iter()
            .all(|&r| pow_raw(q, &modulus_poly, cand, order / r) != CubicElem::ONE)
            && pow_raw(q, &modulus_poly, cand, order) == CubicElem::ONE;
        if ok {
            return Ok(cand);
        }
    }
    Err(FieldError::ExhaustedCandidates)
}

/// First monic cubic with no root in GF(q), scanning x³ + c2·x² + c1·x + c0
/// by ascending (c2, c1, c0).
fn first_rootless_cubic(q: u64) -> [u64; 4] {
    for idx in 0..q * q * q {
        let poly = [idx % q, (idx / q) % q, idx / (q * q), 1];
        if !has_root(q, &poly) {
            return poly;
        }
    }
    unreachable!("rootless cubics exist over every finite field");
}

/// Root detection via gcd(f, x^q − x): the product of (x − a) over all
/// a ∈ GF(q) shares a factor with f exactly when f has a root. O(log q)
/// multiplications instead of an O(q) evaluation sweep.
fn has_root(q: u64, poly: &[u64; 4]) -> bool {
    let x = CubicElem { c0: 0, c1: 1, c2: 0 };
    let xq = pow_raw(q, poly, x, q);
    // g = (x^q mod f) − x, degree ≤ 2
    let g = trim(vec![xq.c0, (xq.c1 + q - 1) % q, xq.c2]);
    if g.is_empty() {
        // f divides x^q − x, so f splits into distinct linear factors.
        return true;
    }
    let f = trim(poly.to_vec());
    poly_gcd_degree(&f, &g, q) >= 1
}

fn mul_raw(q: u64, poly: &[u64; 4], a: CubicElem, b: CubicElem) -> CubicElem {
    let av = [a.c0, a.c1, a.c2];
    let bv = [b.c0, b.c1, b.c2];
    let mut t = [0u64; 5];
    for i in 0..3 {
        for j in 0..3 {
            t[i + j] = (t[i + j] + av[i] * bv[j]) % q;
        }
    }
    // Reduce with x³ ≡ −(p2·x² + p1·x + p0).
    let n = [
        (q - poly[0] % q) % q,
        (q - poly[1] % q) % q,
        (q - poly[2] % q) % q,
    ];
    for i in (3..=4).rev() {
        let c = t[i];
        if c != 0 {
            t[i] = 0;
            t[i - 1] = (t[i - 1] + c * n[2]) % q;
            t[i - 2] = (t[i - 2] + c * n[1]) % q;
            t[i - 3] = (t[i - 3] + c * n[0]) % q;
        }
    }
    CubicElem {
        c0: t[0],
        c1: t[1],
        c2: t[2],
    }
}

fn pow_raw(q: u64, poly: &[u64; 4], a: CubicElem, mut e: u64) -> CubicElem {
    let mut base = a;
    let mut acc = CubicElem::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_raw(q, poly, acc, base);
        }
        base = mul_raw(q, poly, base, base);
        e >>= 1;
    }
    acc
}

// Dense univariate polynomials over GF(q), constant-first, trimmed.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(a: u64, q: u64) -> u64 {
    // Extended Euclid; a ≠ 0 mod q, q prime.
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r) = (q as i64, (a % q) as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(q as i64) as u64
}

fn poly_rem(num: &[u64], den: &[u64], q: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    let lead_inv = inv_mod(den[d], q);
    while rem.len() > d {
        let k = rem.len() - 1;
        let coef = rem[k] % q;
        if coef != 0 {
            let scale = coef * lead_inv % q;
            for (i, &dc) in den.iter().enumerate() {
                let sub = scale * dc % q;
                rem[k - d + i] = (rem[k - d + i] + q - sub) % q;
            }
        }
        rem.pop();
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

fn poly_gcd_degree(a: &[u64], b: &[u64], q: u64) -> usize {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, q);
        x = y;
        y = r;
    }
    x.len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(c0: u64, c1: u64, c2: u64) -> CubicElem {
        CubicElem { c0, c1, c2 }
    }

    #[test]
    fn gf8_modulus_and_generator() {
        let ctx = make_field(2).unwrap();
        assert_eq!(ctx.modulus_poly(), [1, 1, 0, 1]); // x³ + x + 1
        let alpha = ctx.primitive();
        assert_eq!(alpha, elem(0, 1, 0));
        // α³ = α + 1
        assert_eq!(cubic_pow(&ctx, alpha, 3), elem(1, 1, 0));
        // (α + 1)² = α² + 1
        let a1 = elem(1, 1, 0);
        assert_eq!(cubic_mul(&ctx, a1, a1), elem(1, 0, 1));
        // α has order 7
        assert_eq!(cubic_pow(&ctx, alpha, 7), CubicElem::ONE);
        for e in 1..7 {
            assert_ne!(cubic_pow(&ctx, alpha, e), CubicElem::ONE);
        }
    }

    #[test]
    fn gf27_certification_facts() {
        let ctx = make_field(3).unwrap();
        assert_eq!(ctx.modulus_poly(), [1, 2, 0, 1]); // x³ + 2x + 1
        assert_eq!(ctx.group_order(), 26); // 26 = 2 · 13
        let a = ctx.primitive();
        assert_ne!(cubic_pow(&ctx, a, 13), CubicElem::ONE);
        assert_ne!(cubic_pow(&ctx, a, 2), CubicElem::ONE);
        assert_eq!(cubic_pow(&ctx, a, 26), CubicElem::ONE);
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(make_field(4).unwrap_err(), FieldError::CompositeModulus(4));
        assert_eq!(make_field(9).unwrap_err(), FieldError::CompositeModulus(9));
        assert_eq!(
            make_field(1 << 21).unwrap_err(),
            FieldError::FieldTooLarge(1 << 21)
        );
    }

    #[test]
    fn zero_exponent_is_one() {
        let ctx = make_field(5).unwrap();
        for v in 0..125 {
            let a = elem(v % 5, (v / 5) % 5, v / 25);
            assert_eq!(cubic_pow(&ctx, a, 0), CubicElem::ONE);
        }
    }

    #[test]
    fn generator_powers_exhaust_small_fields() {
        for q in [2u64, 3, 5, 7] {
            let ctx = make_field(q).unwrap();
            let order = ctx.group_order();
            let mut seen = std::collections::HashSet::new();
            let mut cur = CubicElem::ONE;
            for _ in 0..order {
                assert!(!cur.is_zero());
                assert!(seen.insert(cur), "repeated power in GF({q}³)");
                cur = cubic_mul(&ctx, cur, ctx.primitive());
            }
            assert_eq!(cur, CubicElem::ONE);
            assert_eq!(seen.len() as u64, order);
        }
    }

    fn add(q: u64, a: CubicElem, b: CubicElem) -> CubicElem {
        elem((a.c0 + b.c0) % q, (a.c1 + b.c1) % q, (a.c2 + b.c2) % q)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn ring_laws(qi in 0usize..6, xs in prop::array::uniform3(0u64..u64::MAX)) {
            let q = [2u64, 3, 5, 7, 11, 13][qi];
            let ctx = make_field(q).unwrap();
            let e = |v: u64| elem(v % q, (v / q) % q, (v / (q * q)) % q);
            let (a, b, c) = (e(xs[0]), e(xs[1]), e(xs[2]));
            prop_assert_eq!(cubic_mul(&ctx, a, b), cubic_mul(&ctx, b, a));
            prop_assert_eq!(
                cubic_mul(&ctx, cubic_mul(&ctx, a, b), c),
                cubic_mul(&ctx, a, cubic_mul(&ctx, b, c))
            );
            prop_assert_eq!(
                cubic_mul(&ctx, a, add(q, b, c)),
                add(q, cubic_mul(&ctx, a, b), cubic_mul(&ctx, a, c))
            );
        }
    }
}
