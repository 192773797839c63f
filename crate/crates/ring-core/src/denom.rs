//! Denominator-exponent bookkeeping.
//!
//! Exact unitaries are stored as integer-ring numerators over a power
//! denominator: `√2^k` for `Z[ω]` numerators, `√2^k·√5^ℓ` for `Z[i]`
//! numerators. (Neither `√2` nor `√5` lies in `Q(i)`, so in the Gaussian case
//! the numerators can only absorb the *square* of either factor, i.e. `k` and
//! `ℓ` change in steps of two; in `Z[ω]` the element `√2 = ω − ω³` itself is
//! available, so `k` reduces in steps of one.)

use crate::gauss::GaussInt;
use crate::zomega::ZOmega;
use num_bigint::BigInt;

/// Reduces a `(numerators, k)` representation over `√2^k` to least terms:
/// divides all entries by `√2` while possible and `k > 0`.
pub fn reduce_denom_sqrt2(entries: &mut [ZOmega], k: &mut u32) {
    'outer: while *k > 0 {
        let mut reduced = Vec::with_capacity(entries.len());
        for e in entries.iter() {
            match e.div_sqrt2() {
                Some(r) => reduced.push(r),
                None => break 'outer,
            }
        }
        entries.clone_from_slice(&reduced);
        *k -= 1;
    }
}

/// The least exponent `k′ ≤ k` such that `u/√2^(k−k′)` is still integral,
/// i.e. the denominator exponent of `u/√2^k` in least terms. Zero maps to 0.
pub fn least_denom_exp_sqrt2(u: &ZOmega, k: u32) -> u32 {
    if u.is_zero() {
        return 0;
    }
    let mut k = k;
    let mut u = u.clone();
    while k > 0 {
        match u.div_sqrt2() {
            Some(r) => {
                u = r;
                k -= 1;
            }
            None => break,
        }
    }
    k
}

/// Reduces a `(numerators, k, ℓ)` representation over `√2^k·√5^ℓ` with
/// Gaussian-integer numerators: factors of 2 lower `k` by two, factors of 5
/// lower `ℓ` by two. The parity of both exponents is invariant.
pub fn reduce_denom_gauss(entries: &mut [GaussInt], k: &mut u32, l: &mut u32) {
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while *k >= 2 && entries.iter().all(|e| e.divisible_by_int(&two)) {
        for e in entries.iter_mut() {
            *e = e.div_int_exact(&two).unwrap();
        }
        *k -= 2;
    }
    while *l >= 2 && entries.iter().all(|e| e.divisible_by_int(&five)) {
        for e in entries.iter_mut() {
            *e = e.div_int_exact(&five).unwrap();
        }
        *l -= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_reduction() {
        // (√2·u, √2·v)/√2³ reduces to (u, v)/√2².
        let u = ZOmega::new(1, 0, 1, 0); // 1 + i: not divisible by √2? (1−1)=0 even, (0−0) even → divisible!
        let v = ZOmega::new(1, 1, 0, 0);
        let mut entries = vec![u.mul_sqrt2(), v.mul_sqrt2()];
        let mut k = 3;
        reduce_denom_sqrt2(&mut entries, &mut k);
        // v = 1 + ω is not divisible by √2, so exactly one division happens.
        assert_eq!(k, 2);
        assert_eq!(entries, vec![u, v]);
    }

    #[test]
    fn least_exponent() {
        let w = ZOmega::new(1, 1, 0, 0); // 1 + ω, not divisible by √2
        assert_eq!(least_denom_exp_sqrt2(&w, 5), 5);
        assert_eq!(least_denom_exp_sqrt2(&w.mul_sqrt2(), 5), 4);
        assert_eq!(least_denom_exp_sqrt2(&w.mul_sqrt2().mul_sqrt2(), 5), 3);
        assert_eq!(least_denom_exp_sqrt2(&ZOmega::zero(), 5), 0);
    }

    #[test]
    fn gauss_reduction() {
        let mut entries = vec![GaussInt::new(10, 20), GaussInt::new(30, -10)];
        let mut k = 2;
        let mut l = 3;
        reduce_denom_gauss(&mut entries, &mut k, &mut l);
        // Entries divisible by 2 once (k: 2→0) and by 5 once (ℓ: 3→1).
        assert_eq!((k, l), (0, 1));
        assert_eq!(entries, vec![GaussInt::new(1, 2), GaussInt::new(3, -1)]);
    }
}
