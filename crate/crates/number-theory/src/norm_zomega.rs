//! The relative norm equation `t†t = ξ` from `Z[ω]` down to `Z[√2]`.
//!
//! Necessary conditions first: `t†t` is nonnegative under both real
//! embeddings of `Z[√2]`, so `ξ ≥ 0` and `ξ• ≥ 0` or there is nothing to do.
//! After that the solver works prime by prime on `n = ξ•ξ`:
//!
//! * `p = 2` ramifies all the way: `√2` divides `ξ` exactly `v₂(n)` times and
//!   each copy is covered by `δ = 1+ω` with `δ†δ = √2·λ`.
//! * `p ≡ 1 (mod 8)` splits in `Z[√2]` (via `gcd(p, s−√2)`, `s² ≡ 2`) and
//!   each half splits again in `Z[ω]` (via a gcd with `r+i`, `r² ≡ −1`).
//! * `p ≡ 3 (mod 8)` stays prime in `Z[√2]` and splits in `Z[ω]` via a gcd
//!   with `r+ω+ω³`, where `(ω+ω³)² = −2` and `r² ≡ −2 (mod p)`.
//! * `p ≡ 5 (mod 8)` stays prime in `Z[√2]` and splits in `Z[ω]` via a gcd
//!   with `r+i`, `r² ≡ −1 (mod p)`.
//! * `p ≡ 7 (mod 8)` splits in `Z[√2]` but each half stays prime in `Z[ω]`:
//!   its exponent in `ξ` must be even, else there is no solution.
//!
//! The assembled candidate `t₀` satisfies `t₀†t₀ = u·ξ` for a unit `u` of
//! `Z[√2]`; both sides are totally positive, so `u = λ^{2j}` (units are
//! `±λ^m` and `λ• = −λ⁻¹` forces the sign and parity). A certified logarithm
//! pins down `j`, an exact power check confirms it, and `t = λ^{−j}·t₀`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use ring_core::constants::NumericConstants;
use ring_core::{ZOmega, ZRoot2};

use crate::euclid::gcd_ring;
use crate::factor::Factorization;
use crate::modular::sqrt_mod;
use crate::NormSolveError;

/// A `t ∈ Z[ω]` with `t†t = ξ`, or `None` when the equation is unsolvable.
/// `fact` must be a complete factorization of `n = ξ•ξ` (always ≥ 0 once the
/// positivity screen passes).
pub fn solve_norm_zomega(
    xi: &ZRoot2,
    fact: &Factorization,
) -> Result<Option<ZOmega>, NormSolveError> {
    if xi.is_zero() {
        return Ok(Some(ZOmega::zero()));
    }
    if xi.signum() < 0 || xi.conj2().signum() < 0 {
        return Ok(None);
    }
    let n = xi.norm();
    assert!(n.is_positive());
    if !fact.complete {
        return Err(NormSolveError::IncompleteFactorization);
    }
    if fact.product() != n {
        return Err(NormSolveError::MismatchedFactorization);
    }

    let mut t0 = ZOmega::one();
    let mut rem = xi.clone(); // ξ with the handled prime factors divided out
    for (p, e) in &fact.factors {
        let e = *e;
        if *p == BigInt::from(2) {
            for _ in 0..e {
                rem = rem.div_sqrt2().expect("v₂(n) counts the √2 factors of ξ");
            }
            t0 = &t0 * &ZOmega::new(1, 1, 0, 0).pow(e as u64); // δ = 1+ω
            continue;
        }
        match p.mod_floor(&BigInt::from(8)).to_u32().unwrap() {
            1 => {
                let eta = zroot2_prime_above(p);
                let (a, r1) = divide_out(&rem, &eta);
                let (b, r2) = divide_out(&r1, &eta.conj2());
                rem = r2;
                assert_eq!(a + b, e as u64, "η- and η•-valuations must exhaust p^e");
                let r = sqrt_mod(&BigInt::from(-1), p).expect("−1 is a residue mod p ≡ 1 (mod 8)");
                let tau_a = split_in_zomega(&eta, &ZOmega::new(r.clone(), 0, 1, 0), p);
                let tau_b = split_in_zomega(&eta.conj2(), &ZOmega::new(r, 0, 1, 0), p);
                t0 = &(&t0 * &tau_a.pow(a)) * &tau_b.pow(b);
            }
            3 => {
                // inert in Z[√2]: ξ and ξ• share the same p-valuation, so e = 2c
                assert!(e.is_even(), "v_p(ξ•ξ) is even for p inert in Z[√2]");
                let c = (e / 2) as u64;
                rem = divide_out_int(&rem, p, c);
                let r = sqrt_mod(&BigInt::from(-2), p).expect("−2 is a residue mod p ≡ 3 (mod 8)");
                let tau = split_inert(p, &ZOmega::new(r, 1, 0, 1));
                t0 = &t0 * &tau.pow(c);
            }
            5 => {
                assert!(e.is_even(), "v_p(ξ•ξ) is even for p inert in Z[√2]");
                let c = (e / 2) as u64;
                rem = divide_out_int(&rem, p, c);
                let r = sqrt_mod(&BigInt::from(-1), p).expect("−1 is a residue mod p ≡ 5 (mod 8)");
                let tau = split_inert(p, &ZOmega::new(r, 0, 1, 0));
                t0 = &t0 * &tau.pow(c);
            }
            7 => {
                let eta = zroot2_prime_above(p);
                let (a, r1) = divide_out(&rem, &eta);
                let (b, r2) = divide_out(&r1, &eta.conj2());
                rem = r2;
                assert_eq!(a + b, e as u64, "η- and η•-valuations must exhaust p^e");
                // η and η• stay prime in Z[ω]; only their squares are
                // relative norms, so both exponents must be even
                if a.is_odd() || b.is_odd() {
                    return Ok(None);
                }
                let fa = ZOmega::from_zroot2(&eta).pow(a / 2);
                let fb = ZOmega::from_zroot2(&eta.conj2()).pow(b / 2);
                t0 = &(&t0 * &fa) * &fb;
            }
            _ => unreachable!("p is an odd prime"),
        }
    }
    assert!(rem.is_unit(), "all prime factors accounted for");

    // t₀†t₀ = u·ξ with u = λ^{2j}; rescale by λ^{−j}
    let u = t0
        .mag_sq()
        .div_exact(xi)
        .expect("t₀†t₀ is an associate of ξ");
    assert!(u.is_unit() && u.signum() > 0 && u.conj2().signum() > 0);
    let j = half_lambda_exponent(&u);
    let t = &t0 * &ZOmega::from_zroot2(&ZRoot2::lambda_pow(-j));
    assert_eq!(t.mag_sq(), *xi, "witness must satisfy its norm equation");
    Ok(Some(t))
}

/// The prime of `Z[√2]` above `p ≡ ±1 (mod 8)`, via `gcd(p, s−√2)`.
fn zroot2_prime_above(p: &BigInt) -> ZRoot2 {
    let s = sqrt_mod(&BigInt::from(2), p).expect("2 is a residue mod p ≡ ±1 (mod 8)");
    let eta = gcd_ring(&ZRoot2::from_int(p.clone()), &ZRoot2::new(s, -1))
        .expect("arguments are nonzero");
    assert_eq!(eta.norm().abs(), *p, "splitting gcd must have norm ±p");
    eta
}

/// A `Z[ω]`-prime above the split `Z[√2]`-prime `eta`, via a gcd with `probe`
/// (an element whose norm is divisible by `p` but not by `p²`-many shares).
fn split_in_zomega(eta: &ZRoot2, probe: &ZOmega, p: &BigInt) -> ZOmega {
    let tau = gcd_ring(&ZOmega::from_zroot2(eta), probe).expect("arguments are nonzero");
    assert_eq!(tau.norm(), *p, "relative norm of τ must be an associate of η");
    tau
}

/// A `Z[ω]`-prime above the rational prime `p` inert in `Z[√2]`.
fn split_inert(p: &BigInt, probe: &ZOmega) -> ZOmega {
    let tau = gcd_ring(&ZOmega::from_int(p.clone()), probe).expect("arguments are nonzero");
    assert_eq!(tau.norm(), p * p, "relative norm of τ must be an associate of p");
    tau
}

/// Valuation of `x` at the prime element `pi`, with the quotient after
/// removing every copy.
fn divide_out(x: &ZRoot2, pi: &ZRoot2) -> (u64, ZRoot2) {
    let mut v = 0u64;
    let mut cur = x.clone();
    while let Some(next) = cur.div_exact(pi) {
        cur = next;
        v += 1;
    }
    (v, cur)
}

/// Divides `x` by `p^c` exactly.
fn divide_out_int(x: &ZRoot2, p: &BigInt, c: u64) -> ZRoot2 {
    let d = ZRoot2::from_int(num_traits::pow(p.clone(), c as usize));
    x.div_exact(&d).expect("ξ is divisible by p^c for p inert")
}

/// For a totally positive unit `u = λ^{2j}` of `Z[√2]`, recover `j`: estimate
/// `ln u / (2 ln λ)` with certified interval arithmetic, then confirm the
/// rounded candidate by an exact power comparison.
fn half_lambda_exponent(u: &ZRoot2) -> i64 {
    if *u == ZRoot2::one() {
        return 0;
    }
    // λ^{−2|j|} suffers cancellation: coefficients of ~1.28·|2j| bits leave a
    // value of ~2^{−1.28·|2j|}, so the sign (and the log) needs roughly twice
    // the coefficient size in working bits; 3× plus slack is comfortable
    let coeff_bits = u.a.bits().max(u.b.bits()) as u32;
    let mut prec = 64 + 3 * coeff_bits;
    loop {
        let iu = u.to_interval(prec);
        if iu.sign() == Some(1) {
            let est = iu.ln() / NumericConstants::at(prec).ln_lambda.mul_pow2(1);
            let j = est.to_f64().round() as i64;
            if ZRoot2::lambda_pow(2 * j) == *u {
                return j;
            }
        }
        prec *= 2;
        assert!(prec < 1 << 24, "λ-exponent recovery failed to converge");
    }
}
