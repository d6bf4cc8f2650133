//! Prime helpers shared by the record, cycle and primorial modules.
//!
//! Sieving and 64-bit primality are delegated to `primal`, whose `is_prime`
//! is a deterministic Miller-Rabin over the full `u64` range.

/// The first sixteen primes. Their product exceeds `u64::MAX`, so every
/// nonzero `u64` has a non-divisor among them.
pub const SMALL_PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

pub fn is_prime(n: u64) -> bool {
    primal::is_prime(n)
}

/// All primes `<= limit`, ascending.
pub fn primes_upto(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    primal::Sieve::new(limit as usize)
        .primes_from(0)
        .take_while(|&p| p as u64 <= limit)
        .map(|p| p as u64)
        .collect()
}

/// The first `count` primes, `p_1 = 2` first.
pub fn first_primes(count: usize) -> Vec<u64> {
    primal::Primes::all().take(count).map(|p| p as u64).collect()
}

/// Smallest prime that does not divide `m`.
///
/// `m` must be nonzero; every prime divides zero.
pub fn smallest_prime_not_dividing(m: u64) -> u64 {
    assert!(m != 0, "every prime divides zero");
    SMALL_PRIMES
        .iter()
        .copied()
        .find(|p| !m.is_multiple_of(*p))
        .expect("product of SMALL_PRIMES exceeds u64::MAX")
}

/// Twin prime pairs `(p, p + 2)` with `lo <= p` and `p + 2 <= limit`.
pub fn twin_primes(lo: u64, limit: u64) -> Vec<(u64, u64)> {
    let primes = primes_upto(limit);
    primes
        .windows(2)
        .filter(|w| w[1] == w[0] + 2 && w[0] >= lo)
        .map(|w| (w[0], w[1]))
        .collect()
}
