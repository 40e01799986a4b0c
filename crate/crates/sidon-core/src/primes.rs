//! Small deterministic prime utilities shared by the field constructor, the
//! modulus scan, and the benchmark families.

/// Deterministic primality by trial division (6k±1 wheel). Intended for the
/// sizes this crate actually meets (moduli below 2^42 or so); cost is
/// O(sqrt n).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d: u64 = 5;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime factors of `n`, ascending, by trial division.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        if *n % p == 0 {
            out.push(p);
            while *n % p == 0 {
                *n /= p;
            }
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d: u64 = 5;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First `k` primes via a sieve of Eratosthenes with a standard upper-bound
/// estimate (regrown if the estimate ever falls short).
pub fn first_primes(k: usize) -> Vec<u64> {
    if k == 0 {
        return Vec::new();
    }
    let mut limit = if k < 6 {
        16
    } else {
        let kf = k as f64;
        (kf * (kf.ln() + kf.ln().ln()) * 1.2) as usize + 16
    };
    loop {
        let primes = sieve_upto(limit);
        if primes.len() >= k {
            return primes[..k].to_vec();
        }
        limit *= 2;
    }
}

fn sieve_upto(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= limit {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}
