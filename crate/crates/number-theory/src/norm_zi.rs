//! The norm equation `α†α = m` over the Gaussian integers.
//!
//! With a complete factorization of `m` in hand the solution is classical:
//! `2 = −i(1+i)²` is ramified, a prime `p ≡ 1 (mod 4)` splits as `γγ†` with
//! `γ = gcd(p, r+i)` for `r² ≡ −1 (mod p)`, and a prime `p ≡ 3 (mod 4)` stays
//! prime — it can only contribute the square `p^(e/2)`, so an odd exponent
//! means there is no solution at all.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use ring_core::GaussInt;

use crate::euclid::gcd_ring;
use crate::factor::Factorization;
use crate::modular::sqrt_mod;
use crate::NormSolveError;

/// A Gaussian integer `α` with `α†α = m`, or `None` when no such `α` exists
/// (equivalently, some prime `p ≡ 3 (mod 4)` divides `m` to an odd power).
pub fn solve_norm_zi(
    m: &BigInt,
    fact: &Factorization,
) -> Result<Option<GaussInt>, NormSolveError> {
    assert!(!m.is_negative(), "norms are nonnegative");
    if m.is_zero() {
        return Ok(Some(GaussInt::zero()));
    }
    if !fact.complete {
        return Err(NormSolveError::IncompleteFactorization);
    }
    if fact.product() != *m {
        return Err(NormSolveError::MismatchedFactorization);
    }

    let mut alpha = GaussInt::one();
    for (p, e) in &fact.factors {
        let e = *e;
        if *p == BigInt::from(2) {
            alpha = &alpha * &GaussInt::new(1, 1).pow(e as u64);
        } else if p.mod_floor(&BigInt::from(4)).is_one() {
            let r = sqrt_mod(&BigInt::from(-1), p).expect("−1 is a residue mod p ≡ 1 (mod 4)");
            let gamma = gcd_ring(&GaussInt::from_int(p.clone()), &GaussInt::new(r, BigInt::one()))
                .expect("arguments are nonzero");
            assert_eq!(gamma.norm(), *p, "splitting gcd must have norm p");
            alpha = &alpha * &gamma.pow(e as u64);
        } else {
            // inert prime: contributes α†α = p² per copy
            if e.is_odd() {
                return Ok(None);
            }
            alpha = &alpha * &GaussInt::from_int(num_traits::pow(p.clone(), (e / 2) as usize));
        }
    }
    assert_eq!(alpha.norm(), *m, "witness must satisfy its norm equation");
    Ok(Some(alpha))
}
