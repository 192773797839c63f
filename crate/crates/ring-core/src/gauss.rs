//! The Gaussian integers `Z[i]`.

use crate::util::{div_round, forward_binop};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian integer `re + im·i` with arbitrary-precision components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GaussInt { re: n.into(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// The norm `N(a + bi) = a² + b²` (multiplicative, nonnegative).
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        GaussInt { re: -&self.im, im: self.re.clone() }
    }

    /// Multiplication by `i^j`.
    pub fn mul_i_pow(&self, j: u8) -> Self {
        let mut out = self.clone();
        for _ in 0..(j % 4) {
            out = out.mul_i();
        }
        out
    }

    /// `true` iff every component is divisible by the rational integer `n`.
    pub fn divisible_by_int(&self, n: &BigInt) -> bool {
        (&self.re % n).is_zero() && (&self.im % n).is_zero()
    }

    /// Exact division by a rational integer; `None` if not divisible.
    pub fn div_int_exact(&self, n: &BigInt) -> Option<Self> {
        if self.divisible_by_int(n) {
            Some(GaussInt { re: &self.re / n, im: &self.im / n })
        } else {
            None
        }
    }

    /// Exact division `self / d` in `Z[i]`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &GaussInt) -> Option<Self> {
        // self/d = self·conj(d)/N(d); exact iff both components divide.
        let num = self * &d.conj();
        num.div_int_exact(&d.norm())
    }

    /// Euclidean division: returns `(q, r)` with `self = q·d + r` and
    /// `N(r) ≤ N(d)/2 < N(d)`, obtained by rounding the exact quotient's
    /// components to the nearest integers.
    pub fn div_rem_nearest(&self, d: &GaussInt) -> (GaussInt, GaussInt) {
        assert!(!d.is_zero(), "division by zero in Z[i]");
        let nd = d.norm();
        let num = self * &d.conj();
        let q = GaussInt {
            re: div_round(&num.re, &nd),
            im: div_round(&num.im, &nd),
        };
        let r = self - &(&q * d);
        (q, r)
    }

    /// `true` iff `self` is one of the units `±1, ±i`.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u64) -> GaussInt {
        let mut acc = GaussInt::one();
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
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl<'a, 'b> Add<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a, 'b> Sub<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a, 'b> Mul<&'b GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(Add, add, GaussInt);
forward_binop!(Sub, sub, GaussInt);
forward_binop!(Mul, mul, GaussInt);

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn norm_is_multiplicative() {
        let a = GaussInt::new(3, -7);
        let b = GaussInt::new(-2, 5);
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn nearest_division_small_remainder() {
        let a = GaussInt::new(1000, -777);
        let b = GaussInt::new(13, 8);
        let (q, r) = a.div_rem_nearest(&b);
        assert_eq!(&(&q * &b) + &r, a);
        // Nearest rounding gives N(r) ≤ N(b)/2.
        assert!(r.norm() * BigInt::from(2) <= b.norm());
    }

    #[test]
    fn exact_division() {
        let a = GaussInt::new(3, 4);
        let b = GaussInt::new(-1, 7);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&GaussInt::new(2, 0)), None);
    }
}
