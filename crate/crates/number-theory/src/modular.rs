//! Modular arithmetic helpers: Legendre symbols and square roots modulo a
//! prime (Tonelli–Shanks).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Legendre symbol `(a/p)` for an odd prime `p`: `1` for residues, `-1` for
/// non-residues, `0` when `p | a`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e: BigInt = (p - 1u32) >> 1usize;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// A square root of `a` modulo the prime `p`, when one exists.
///
/// The input is reduced modulo `p` first, so negative `a` is fine. Behaviour
/// is undefined for composite `p` (the caller guarantees primality); the
/// result is always checked by squaring before it is returned.
pub fn sqrt_mod(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if *p == BigInt::from(2) {
        return Some(a); // the only nonzero residue, 1, is its own root
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    let r = if p.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        // a^{(p+1)/4} squares to a^{(p+1)/2} = a·a^{(p−1)/2} = a
        a.modpow(&((p + 1u32) >> 2usize), p)
    } else {
        tonelli_shanks(&a, p)
    };
    assert!(
        (&r * &r).mod_floor(p) == a,
        "modular square root failed its own check"
    );
    Some(r)
}

/// Tonelli–Shanks for `p ≡ 1 (mod 4)`, `a` a known residue.
fn tonelli_shanks(a: &BigInt, p: &BigInt) -> BigInt {
    // p − 1 = q·2^s with q odd
    let mut q: BigInt = p - 1u32;
    let mut s = 0u32;
    while q.is_even() {
        q >>= 1usize;
        s += 1;
    }
    // any quadratic non-residue works as the progress generator
    let mut z = BigInt::from(2);
    while legendre(&z, p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) >> 1usize), p);
    while !t.is_one() {
        // least i with t^{2^i} = 1; i < m for prime p
        let mut i = 0u32;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2).mod_floor(p);
            i += 1;
            assert!(i < m, "sqrt_mod called with a composite modulus");
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1) as usize), p);
        m = i;
        c = (&b * &b).mod_floor(p);
        t = (&t * &c).mod_floor(p);
        r = (&r * &b).mod_floor(p);
    }
    r
}
