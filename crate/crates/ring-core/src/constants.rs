//! Frequently used exact ring elements and certified numeric constants.
//!
//! The exact constants come with their defining identities machine-checked at
//! first use, so a typo in a formula elsewhere cannot silently change the
//! meaning of `δ` or `λ`. The numeric constants are certified enclosures at a
//! caller-chosen precision.

use crate::interval::Interval;
use crate::zomega::ZOmega;
use crate::zroot2::ZRoot2;
use once_cell::sync::Lazy;

/// Exact distinguished elements.
///
/// * `ω = e^{iπ/4}`, `i = ω²`, `√2 = ω − ω³`
/// * `λ = 1 + √2` (fundamental unit of `Z[√2]`, `λ·λ• = −1`)
/// * `δ = 1 + ω`, satisfying `δ†δ = 2 + √2 = √2·λ` and `δ/|δ| = e^{iπ/8}`
pub struct RingConstants {
    pub omega: ZOmega,
    pub i: ZOmega,
    pub sqrt2: ZOmega,
    pub delta: ZOmega,
    pub delta_dag: ZOmega,
    pub lambda: ZRoot2,
    pub lambda_inv: ZRoot2,
}

static RING: Lazy<RingConstants> = Lazy::new(|| {
    let c = RingConstants {
        omega: ZOmega::omega(),
        i: ZOmega::i(),
        sqrt2: ZOmega::sqrt2(),
        delta: &ZOmega::one() + &ZOmega::omega(),
        delta_dag: (&ZOmega::one() + &ZOmega::omega()).dagger(),
        lambda: ZRoot2::lambda(),
        lambda_inv: ZRoot2::lambda_inv(),
    };
    // Defining identities; cheap, checked once.
    assert_eq!(c.omega.mul_omega_pow(7), c.omega.mul_omega_pow(-1));
    assert_eq!(ZOmega::omega_pow(4), -ZOmega::one());
    assert_eq!(&c.omega * &c.omega, c.i);
    assert_eq!(&c.sqrt2 * &c.sqrt2, ZOmega::from_int(2));
    assert_eq!(&c.lambda * &c.lambda_inv, ZRoot2::one());
    assert_eq!(&c.lambda * &c.lambda.conj2(), -ZRoot2::one());
    // δ†δ = 2 + √2 = √2·λ.
    assert_eq!(
        (&c.delta_dag * &c.delta).to_zroot2(),
        Some(ZRoot2::new(2, 1))
    );
    assert_eq!(ZRoot2::sqrt2() * ZRoot2::lambda(), ZRoot2::new(2, 1));
    // δ·ω⁻¹ = δ† and (ω − i)·δ = √2, i.e. δ⁻¹ = (ω − i)/√2.
    assert_eq!(c.delta.mul_omega_pow(-1), c.delta_dag);
    assert_eq!(&(&c.omega - &c.i) * &c.delta, c.sqrt2);
    c
});

/// The shared exact constants (identity-checked on first access).
pub fn ring() -> &'static RingConstants {
    &RING
}

/// Certified enclosures of the derived real constants at a given precision.
pub struct NumericConstants {
    pub prec: u32,
    pub pi: Interval,
    pub sqrt2: Interval,
    pub inv_sqrt2: Interval,
    pub lambda: Interval,
    pub lambda_inv: Interval,
    pub ln_lambda: Interval,
    /// `|δ| = √(2 + √2)`.
    pub abs_delta: Interval,
    /// `|δ•| = √(2 − √2)`.
    pub abs_delta_bullet: Interval,
    /// `|1 − e^{iπ/8}| = 2·sin(π/16)`: below this ε a T-count-0 circuit exists.
    pub c_t: Interval,
    /// `|1 − e^{iπ/4}| = 2·sin(π/8)`: below this ε a single phase gate suffices.
    pub c_v: Interval,
}

impl NumericConstants {
    pub fn at(prec: u32) -> NumericConstants {
        let pi = Interval::pi(prec);
        let sqrt2 = Interval::sqrt2(prec);
        let one = Interval::one(prec);
        let two = Interval::from_int(2, prec);
        let lambda = &one + &sqrt2;
        let lambda_inv = &sqrt2 - &one;
        let ln_lambda = lambda.ln();
        let abs_delta = (&two + &sqrt2).sqrt();
        let abs_delta_bullet = (&two - &sqrt2).sqrt();
        let c_t = (&pi / Interval::from_int(16, prec)).sin().mul_pow2(1);
        let c_v = (&pi / Interval::from_int(8, prec)).sin().mul_pow2(1);
        NumericConstants {
            prec,
            pi,
            sqrt2,
            inv_sqrt2: &one / &Interval::sqrt2(prec),
            lambda,
            lambda_inv,
            ln_lambda,
            abs_delta,
            abs_delta_bullet,
            c_t,
            c_v,
        }
    }

    /// `λ^x = exp(x·ln λ)` as a certified enclosure.
    pub fn lambda_pow(&self, x: &Interval) -> Interval {
        (x * &self.ln_lambda).exp()
    }
}
