//! Integer helpers shared by the field and dynamics modules: primality,
//! factorization, divisors and the Möbius function. Everything here is plain
//! trial division, which is plenty for the sizes the crate materializes.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending. Returns an empty list for `n <= 1`.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The classical Möbius function.
pub fn mobius(mut n: u64) -> i32 {
    assert!(n > 0, "mobius is defined on positive integers");
    let mut sign = 1;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `base^exp` if it fits in a `u64`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Σ_{d | m} μ(m/d) · p^d, evaluated exactly.
pub(crate) fn mobius_power_sum(p: u64, m: u64) -> BigUint {
    let base = BigInt::from(p);
    let mut total = BigInt::zero();
    for d in divisors(m) {
        let mu = mobius(m / d);
        if mu == 0 {
            continue;
        }
        let term = num_traits::pow::pow(base.clone(), d as usize);
        if mu > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
        .to_biguint()
        .expect("Möbius power sums count points and are never negative")
}

pub(crate) fn big_pow(p: u64, e: u64) -> BigUint {
    let mut acc = BigUint::one();
    let base = BigUint::from(p);
    for _ in 0..e {
        acc *= &base;
    }
    acc
}
