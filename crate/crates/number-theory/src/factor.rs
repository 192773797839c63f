//! Bounded-effort integer factorization: exact trial division below 10⁴,
//! then Brent's cycle-finding variant of the rho method under an explicit
//! operation budget. Running out of budget is an ordinary outcome, reported
//! through [`Factorization::complete`], never an error.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use once_cell::sync::Lazy;

use crate::primality::is_prime;
use crate::rng::RandomSource;

/// Trial-division bound; prime factors below it are always found.
const TRIAL_BOUND: u32 = 10_000;

/// Default rho budget in modular ring operations. The rho method finds a
/// prime factor p in ~1.2·√p expected steps, so this reliably clears factors
/// up to ~30 bits while giving up fast on genuinely hard composites — the
/// right trade for a synthesis loop that can simply skip a candidate.
pub const DEFAULT_EFFORT: u64 = 100_000;

static SMALL_PRIMES: Lazy<Vec<u32>> = Lazy::new(|| {
    let n = TRIAL_BOUND as usize;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for p in 2..n {
        if !composite[p] {
            out.push(p as u32);
            let mut q = p * p;
            while q < n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
});

/// Outcome of [`factor_bounded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Prime–exponent pairs, primes strictly increasing.
    pub factors: Vec<(BigInt, u32)>,
    /// `true` when the listed powers multiply back to the input. When
    /// `false`, some composite cofactor resisted the budget and was dropped;
    /// callers are expected to skip the candidate that produced it.
    pub complete: bool,
    /// Modular operations spent in the rho stage.
    pub effort_spent: u64,
}

impl Factorization {
    /// Product of the listed prime powers.
    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }
}

/// Factor `n ≥ 1` with at most `effort` rho operations. Deterministic for a
/// fixed `rng` state.
pub fn factor_bounded(n: &BigInt, effort: u64, rng: &mut RandomSource) -> Factorization {
    assert!(n >= &BigInt::one(), "factor_bounded needs n ≥ 1");
    let mut counts: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut m = n.clone();
    for &p in SMALL_PRIMES.iter() {
        if m.is_one() {
            break;
        }
        let p = BigInt::from(p);
        if &p * &p > m {
            // the cofactor has no divisor ≤ its square root: it is prime
            *counts.entry(std::mem::replace(&mut m, BigInt::one())).or_insert(0) += 1;
            break;
        }
        while m.is_multiple_of(&p) {
            m /= &p;
            *counts.entry(p.clone()).or_insert(0) += 1;
        }
    }

    let mut effort_spent = 0u64;
    let mut complete = true;
    let mut pending = vec![m];
    while let Some(c) = pending.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime(&c, rng) {
            *counts.entry(c).or_insert(0) += 1;
        } else {
            match rho_brent(&c, effort, &mut effort_spent, rng) {
                Some(d) => {
                    pending.push(&c / &d);
                    pending.push(d);
                }
                None => complete = false, // cofactor dropped
            }
        }
    }

    Factorization {
        factors: counts.into_iter().collect(),
        complete,
        effort_spent,
    }
}

fn rho_step(y: &BigInt, c: &BigInt, n: &BigInt) -> BigInt {
    ((y * y) + c).mod_floor(n)
}

/// Some nontrivial (not necessarily prime) factor of the odd composite `n`,
/// or `None` once `spent` reaches `budget`. Batches `gcd`s in groups of 64
/// and falls back to single steps from the last checkpoint when a batch
/// overshoots the cycle.
fn rho_brent(
    n: &BigInt,
    budget: u64,
    spent: &mut u64,
    rng: &mut RandomSource,
) -> Option<BigInt> {
    const BATCH: u64 = 64;
    while *spent < budget {
        let c = rng.below(&(n - 3u32)) + 1u32;
        let mut y = rng.below(&(n - 1u32)) + 1u32;
        let mut g = BigInt::one();
        let mut q = BigInt::one();
        let mut r: u64 = 1;
        let mut x = y.clone();
        let mut checkpoint = y.clone();
        while g.is_one() && *spent < budget {
            x = y.clone();
            for _ in 0..r {
                y = rho_step(&y, &c, n);
            }
            *spent += r;
            let mut k = 0u64;
            while k < r && g.is_one() && *spent < budget {
                checkpoint = y.clone();
                let lim = BATCH.min(r - k);
                for _ in 0..lim {
                    y = rho_step(&y, &c, n);
                    q = (&q * (&x - &y)).mod_floor(n);
                }
                *spent += lim;
                g = q.gcd(n);
                k += lim;
            }
            r <<= 1;
        }
        if g == *n {
            // the batch collapsed to 0 mod n; replay one step at a time
            let mut ys = checkpoint;
            for _ in 0..=BATCH {
                ys = rho_step(&ys, &c, n);
                *spent += 1;
                g = (&x - &ys).mod_floor(n).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
        // unlucky parameters (or budget exhausted mid-attempt): try again
    }
    None
}
