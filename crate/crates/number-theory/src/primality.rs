//! Primality testing.
//!
//! A strong-pseudoprime (Miller–Rabin) test: below 2⁶⁴ the first twelve
//! primes form a witness set with no known-to-exist — in fact provably no —
//! strong pseudoprimes, so the answer is deterministic and exact; above, a
//! fixed number of random witnesses from the caller's [`RandomSource`] gives
//! an error probability below 4⁻⁴⁰.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::rng::RandomSource;

const U64_WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: u32 = 40;

/// Strong-probable-prime check of odd `n` against a single witness.
/// `n − 1 = d·2^s` is precomputed by the caller.
fn strong_probable_prime(n: &BigInt, a: &BigInt, d: &BigInt, s: u32) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x).mod_floor(n);
        if x == n1 {
            return true;
        }
    }
    false
}

/// Is `n` prime? Exact below 2⁶⁴; probabilistic (one-sided, composite never
/// reported prime by a passing witness set wrongly more often than 4⁻⁴⁰) above.
pub fn is_prime(n: &BigInt, rng: &mut RandomSource) -> bool {
    // small primes and their multiples
    for p in U64_WITNESSES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    if *n < BigInt::from(2) {
        return false;
    }
    // n odd and > 37 from here on; n − 1 = d·2^s
    let mut d: BigInt = n - 1u32;
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1usize;
        s += 1;
    }
    if n.to_u64().is_some() {
        U64_WITNESSES
            .iter()
            .all(|&a| strong_probable_prime(n, &BigInt::from(a), &d, s))
    } else {
        let span = n - 4u32; // witnesses uniform in [2, n − 2]
        (0..RANDOM_ROUNDS).all(|_| {
            let a = rng.below(&span) + 2u32;
            strong_probable_prime(n, &a, &d, s)
        })
    }
}
