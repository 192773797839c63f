//! Exact dyadic fractions and `Z[√2]`-valued dyadic fractions.
//!
//! These are the endpoint types of the grid solvers: every comparison, floor
//! and ceiling here is exact, which is what makes one-dimensional grid
//! membership exactly decidable.

use crate::interval::Interval;
use crate::util::{div_ceil, floor_mul_sqrt2, forward_binop, scaled_to_f64};
use crate::zroot2::ZRoot2;
use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact dyadic fraction `mant / 2^exp`.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn new(mant: impl Into<BigInt>, exp: u32) -> Self {
        Dyadic { mant: mant.into(), exp }
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// Rewrites to the given (finer or equal) exponent.
    pub fn with_exp(&self, exp: u32) -> Dyadic {
        assert!(exp >= self.exp, "with_exp cannot coarsen exactly");
        Dyadic { mant: &self.mant << (exp - self.exp), exp }
    }

    /// Strips trailing zero bits (canonical form).
    pub fn normalized(&self) -> Dyadic {
        let mut m = self.mant.clone();
        let mut e = self.exp;
        while e > 0 && m.is_even() {
            m >>= 1;
            e -= 1;
        }
        Dyadic { mant: m, exp: e }
    }

    pub fn floor(&self) -> BigInt {
        &self.mant >> self.exp
    }

    pub fn ceil(&self) -> BigInt {
        div_ceil(&self.mant, &(BigInt::from(1) << self.exp))
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        scaled_to_f64(&self.mant, -(self.exp as i64))
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        Interval::from_dyadic(self, prec)
    }
}

use num_integer::Integer;

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.with_exp(e).mant.cmp(&other.with_exp(e).mant)
    }
}

impl<'a, 'b> Add<&'b Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &'b Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        Dyadic {
            mant: self.with_exp(e).mant + rhs.with_exp(e).mant,
            exp: e,
        }
    }
}

impl<'a, 'b> Sub<&'b Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &'b Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &'b Dyadic) -> Dyadic {
        Dyadic {
            mant: &self.mant * &rhs.mant,
            exp: self.exp + rhs.exp,
        }
    }
}

forward_binop!(Add, add, Dyadic);
forward_binop!(Sub, sub, Dyadic);
forward_binop!(Mul, mul, Dyadic);

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.mant, self.exp)
    }
}

/// An exact element `(p + q·√2) / 2^exp` of the ring `Z[√2, 1/2]`.
///
/// This is closed under the operations the one-dimensional grid solver
/// needs: addition, multiplication (in particular by `λ^{±1}` and `√2`),
/// halving, and — because `√2` is irrational — exact sign, floor and
/// ceiling.
#[derive(Clone, PartialEq, Eq)]
pub struct DyadicRoot2 {
    pub p: BigInt,
    pub q: BigInt,
    pub exp: u32,
}

impl DyadicRoot2 {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, exp: u32) -> Self {
        DyadicRoot2 { p: p.into(), q: q.into(), exp }
    }

    pub fn zero() -> Self {
        DyadicRoot2::new(0, 0, 0)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        DyadicRoot2::new(n, 0, 0)
    }

    pub fn from_dyadic(d: &Dyadic) -> Self {
        DyadicRoot2 { p: d.mant.clone(), q: BigInt::zero(), exp: d.exp }
    }

    pub fn from_zroot2(z: &ZRoot2) -> Self {
        DyadicRoot2 { p: z.a.clone(), q: z.b.clone(), exp: 0 }
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        DyadicRoot2::new(0, 1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn with_exp(&self, exp: u32) -> DyadicRoot2 {
        assert!(exp >= self.exp);
        let s = exp - self.exp;
        DyadicRoot2 { p: &self.p << s, q: &self.q << s, exp }
    }

    /// The `√2 ↦ −√2` conjugate.
    pub fn conj2(&self) -> Self {
        DyadicRoot2 { p: self.p.clone(), q: -&self.q, exp: self.exp }
    }

    /// Exact sign of the real value.
    pub fn signum(&self) -> i32 {
        ZRoot2 { a: self.p.clone(), b: self.q.clone() }.signum()
    }

    /// Division by `2^k` (exact).
    pub fn div_pow2(&self, k: u32) -> Self {
        DyadicRoot2 { p: self.p.clone(), q: self.q.clone(), exp: self.exp + k }
    }

    /// Multiplication by `√2`.
    pub fn mul_sqrt2(&self) -> Self {
        DyadicRoot2 { p: 2 * &self.q, q: self.p.clone(), exp: self.exp }
    }

    /// Multiplication by `λ = 1 + √2`.
    pub fn mul_lambda(&self) -> Self {
        DyadicRoot2 {
            p: &self.p + 2 * &self.q,
            q: &self.p + &self.q,
            exp: self.exp,
        }
    }

    /// Multiplication by `λ⁻¹ = √2 − 1`.
    pub fn mul_lambda_inv(&self) -> Self {
        DyadicRoot2 {
            p: 2 * &self.q - &self.p,
            q: &self.p - &self.q,
            exp: self.exp,
        }
    }

    /// Exact floor `⌊(p + q√2)/2^exp⌋`.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return &self.p >> self.exp;
        }
        // p + q√2 ∈ [n, n+1) with n = p + ⌊q√2⌋, and the value is irrational,
        // so no multiple of 2^exp sits strictly between it and n.
        let n = &self.p + floor_mul_sqrt2(&self.q);
        n >> self.exp
    }

    /// Exact ceiling.
    pub fn ceil(&self) -> BigInt {
        if self.q.is_zero() {
            return div_ceil(&self.p, &(BigInt::from(1) << self.exp));
        }
        // Irrational value: ceil = floor + 1.
        self.floor() + 1
    }

    pub fn to_f64(&self) -> f64 {
        let e = -(self.exp as i64);
        scaled_to_f64(&self.p, e) + scaled_to_f64(&self.q, e) * std::f64::consts::SQRT_2
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        let base = Interval::from_dyadic(&Dyadic::new(self.p.clone(), self.exp), prec);
        let root = Interval::from_dyadic(&Dyadic::new(self.q.clone(), self.exp), prec)
            * Interval::sqrt2(prec);
        base + root
    }
}

impl PartialOrd for DyadicRoot2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRoot2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a, 'b> Add<&'b DyadicRoot2> for &'a DyadicRoot2 {
    type Output = DyadicRoot2;
    fn add(self, rhs: &'b DyadicRoot2) -> DyadicRoot2 {
        let e = self.exp.max(rhs.exp);
        let a = self.with_exp(e);
        let b = rhs.with_exp(e);
        DyadicRoot2 { p: a.p + b.p, q: a.q + b.q, exp: e }
    }
}

impl<'a, 'b> Sub<&'b DyadicRoot2> for &'a DyadicRoot2 {
    type Output = DyadicRoot2;
    fn sub(self, rhs: &'b DyadicRoot2) -> DyadicRoot2 {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b DyadicRoot2> for &'a DyadicRoot2 {
    type Output = DyadicRoot2;
    fn mul(self, rhs: &'b DyadicRoot2) -> DyadicRoot2 {
        DyadicRoot2 {
            p: &self.p * &rhs.p + 2 * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
            exp: self.exp + rhs.exp,
        }
    }
}

forward_binop!(Add, add, DyadicRoot2);
forward_binop!(Sub, sub, DyadicRoot2);
forward_binop!(Mul, mul, DyadicRoot2);

impl Neg for &DyadicRoot2 {
    type Output = DyadicRoot2;
    fn neg(self) -> DyadicRoot2 {
        DyadicRoot2 { p: -&self.p, q: -&self.q, exp: self.exp }
    }
}

impl Neg for DyadicRoot2 {
    type Output = DyadicRoot2;
    fn neg(self) -> DyadicRoot2 {
        -&self
    }
}

impl fmt::Debug for DyadicRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√2)/2^{}", self.p, self.q, self.exp)
    }
}
