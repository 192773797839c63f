//! The real quadratic ring `Z[√2]`.

use crate::interval::Interval;
use crate::util::{div_round, floor_mul_sqrt2, forward_binop};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `a + b·√2` of `Z[√2]`, embedded in the reals.
///
/// The ring carries the conjugation [`ZRoot2::conj2`] `a + b√2 ↦ a − b√2`
/// (written `•` elsewhere in the workspace), the integer-valued multiplicative
/// norm `a² − 2b²`, and the fundamental unit `λ = 1 + √2` with `λ·λ• = −1`.
/// Because `√2` is irrational, the real embedding is injective and the sign
/// of any nonzero element is computable exactly; this drives `Ord`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZRoot2 {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZRoot2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZRoot2 { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        ZRoot2::new(0, 0)
    }

    pub fn one() -> Self {
        ZRoot2::new(1, 0)
    }

    pub fn sqrt2() -> Self {
        ZRoot2::new(0, 1)
    }

    /// The fundamental unit `λ = 1 + √2`.
    pub fn lambda() -> Self {
        ZRoot2::new(1, 1)
    }

    /// `λ⁻¹ = √2 − 1 = −λ•`.
    pub fn lambda_inv() -> Self {
        ZRoot2::new(-1, 1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        ZRoot2 { a: n.into(), b: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The `√2 ↦ −√2` conjugate `a − b√2`.
    pub fn conj2(&self) -> Self {
        ZRoot2 { a: self.a.clone(), b: -&self.b }
    }

    /// The norm `N(a + b√2) = a² − 2b² = (a + b√2)(a − b√2)` (may be negative).
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - 2 * &self.b * &self.b
    }

    /// The exact sign of the real number `a + b√2`: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sa = self.a.sign();
        let sb = self.b.sign();
        use num_bigint::Sign::*;
        match (sa, sb) {
            (NoSign, NoSign) => 0,
            (NoSign, _) => if sb == Plus { 1 } else { -1 },
            (_, NoSign) => if sa == Plus { 1 } else { -1 },
            (Plus, Plus) => 1,
            (Minus, Minus) => -1,
            // Mixed signs: compare |a| with |b|√2 via squares (never equal,
            // since √2 is irrational).
            (Plus, Minus) => if self.norm().is_positive() { 1 } else { -1 },
            (Minus, Plus) => if self.norm().is_negative() { 1 } else { -1 },
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// `⌊a + b√2⌋`, exact.
    pub fn floor(&self) -> BigInt {
        &self.a + floor_mul_sqrt2(&self.b)
    }

    /// Multiplication by `√2`: `(a + b√2)·√2 = 2b + a√2`.
    pub fn mul_sqrt2(&self) -> Self {
        ZRoot2 { a: 2 * &self.b, b: self.a.clone() }
    }

    /// Exact division by `√2`; defined iff `a` is even.
    pub fn div_sqrt2(&self) -> Option<Self> {
        if self.a.is_even() {
            Some(ZRoot2 { a: self.b.clone(), b: &self.a / 2 })
        } else {
            None
        }
    }

    /// Multiplication by `λ = 1 + √2`.
    pub fn mul_lambda(&self) -> Self {
        ZRoot2 { a: &self.a + 2 * &self.b, b: &self.a + &self.b }
    }

    /// Multiplication by `λ⁻¹ = √2 − 1`.
    pub fn mul_lambda_inv(&self) -> Self {
        ZRoot2 { a: 2 * &self.b - &self.a, b: &self.a - &self.b }
    }

    /// `λ^k` for any integer `k`.
    pub fn lambda_pow(k: i64) -> Self {
        let mut out = ZRoot2::one();
        if k >= 0 {
            for _ in 0..k {
                out = out.mul_lambda();
            }
        } else {
            for _ in 0..(-k) {
                out = out.mul_lambda_inv();
            }
        }
        out
    }

    /// Strips all factors of `√2`: returns `(v, u)` with `self = √2^v · u`
    /// and `u` not divisible by `√2`. Requires `self ≠ 0`.
    pub fn sqrt2_valuation(&self) -> (u32, ZRoot2) {
        assert!(!self.is_zero(), "valuation of zero");
        let mut v = 0u32;
        let mut u = self.clone();
        while let Some(next) = u.div_sqrt2() {
            u = next;
            v += 1;
        }
        (v, u)
    }

    /// Exact division `self / d`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZRoot2) -> Option<Self> {
        let nd = d.norm();
        if nd.is_zero() {
            return None;
        }
        let num = self * &d.conj2();
        if (&num.a % &nd).is_zero() && (&num.b % &nd).is_zero() {
            Some(ZRoot2 { a: &num.a / &nd, b: &num.b / &nd })
        } else {
            None
        }
    }

    /// Euclidean division: `(q, r)` with `self = q·d + r` and
    /// `|N(r)| ≤ |N(d)|/2 < |N(d)|`, by rounding the exact quotient's
    /// coordinates to nearest integers.
    pub fn div_rem_nearest(&self, d: &ZRoot2) -> (ZRoot2, ZRoot2) {
        let nd = d.norm();
        assert!(!nd.is_zero(), "division by zero in Z[√2]");
        let num = self * &d.conj2();
        let q = ZRoot2 {
            a: div_round(&num.a, &nd),
            b: div_round(&num.b, &nd),
        };
        let r = self - &(&q * d);
        (q, r)
    }

    /// `true` iff `self` is a unit, i.e. `N(self) = ±1` (`±λ^k`).
    pub fn is_unit(&self) -> bool {
        let n = self.norm();
        n.is_one() || (-n).is_one()
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u64) -> ZRoot2 {
        let mut acc = ZRoot2::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// A certified enclosure of the real value at the given precision.
    pub fn to_interval(&self, prec: u32) -> Interval {
        let sqrt2 = Interval::sqrt2(prec);
        Interval::from_bigint(&self.a, prec) + Interval::from_bigint(&self.b, prec) * sqrt2
    }

    /// Floating-point estimate (not certified; for heuristics only).
    pub fn to_f64(&self) -> f64 {
        bigint_to_f64(&self.a) + bigint_to_f64(&self.b) * std::f64::consts::SQRT_2
    }
}

pub(crate) fn bigint_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::INFINITY)
}

impl PartialOrd for ZRoot2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZRoot2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Debug for ZRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√2)", self.a, self.b)
    }
}

impl fmt::Display for ZRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl<'a, 'b> Add<&'b ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn add(self, rhs: &'b ZRoot2) -> ZRoot2 {
        ZRoot2 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a, 'b> Sub<&'b ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn sub(self, rhs: &'b ZRoot2) -> ZRoot2 {
        ZRoot2 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a, 'b> Mul<&'b ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn mul(self, rhs: &'b ZRoot2) -> ZRoot2 {
        ZRoot2 {
            a: &self.a * &rhs.a + 2 * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

forward_binop!(Add, add, ZRoot2);
forward_binop!(Sub, sub, ZRoot2);
forward_binop!(Mul, mul, ZRoot2);

impl Neg for &ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        ZRoot2 { a: -&self.a, b: -&self.b }
    }
}

impl Neg for ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_casework_matches_floats() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let x = ZRoot2::new(a, b);
                let approx = (a as f64) + (b as f64) * std::f64::consts::SQRT_2;
                let expected = if approx.abs() < 1e-9 { 0 } else { approx.signum() as i32 };
                assert_eq!(x.signum(), expected, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn lambda_is_a_unit() {
        let l = ZRoot2::lambda();
        assert_eq!(l.norm(), BigInt::from(-1));
        assert_eq!(&l * &ZRoot2::lambda_inv(), ZRoot2::one());
        assert_eq!(&l * &l.conj2(), -ZRoot2::one());
        assert_eq!(ZRoot2::lambda_pow(-3) * ZRoot2::lambda_pow(3), ZRoot2::one());
    }

    #[test]
    fn euclidean_division_shrinks_norm() {
        let x = ZRoot2::new(1234, -567);
        let d = ZRoot2::new(3, 5);
        let (q, r) = x.div_rem_nearest(&d);
        assert_eq!(&(&q * &d) + &r, x);
        assert!(r.norm().abs() * BigInt::from(2) <= d.norm().abs());
    }

    #[test]
    fn sqrt2_factors() {
        let x = ZRoot2::new(0, 1).mul_sqrt2().mul_sqrt2().mul_sqrt2(); // √2·√2·√2·√2 = 4
        assert_eq!(x, ZRoot2::new(4, 0));
        // 3 + 7√2 is not divisible by √2; multiply √2 back in five times.
        let odd = ZRoot2::new(3, 7);
        let mut y = odd.clone();
        for _ in 0..5 {
            y = y.mul_sqrt2();
        }
        let (v, u) = y.sqrt2_valuation();
        assert_eq!(v, 5);
        assert_eq!(u, odd);
    }

    #[test]
    fn floor_matches_floats() {
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                let x = ZRoot2::new(a, b);
                let approx = (a as f64) + (b as f64) * std::f64::consts::SQRT_2;
                assert_eq!(x.floor(), BigInt::from(approx.floor() as i64), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn ordering_is_real_ordering() {
        let xs = [
            ZRoot2::new(0, 0),
            ZRoot2::new(1, 0),
            ZRoot2::new(0, 1),
            ZRoot2::new(3, -2),
            ZRoot2::new(-3, 2),
        ];
        for x in &xs {
            for y in &xs {
                let exact = x.cmp(y);
                let approx = x.to_f64().partial_cmp(&y.to_f64()).unwrap();
                assert_eq!(exact, approx);
            }
        }
    }
}
