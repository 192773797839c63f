//! Arbitrary-precision dyadic interval arithmetic with outward rounding.
//!
//! An [`Interval`] is a pair of scaled integers `[lo, hi]·2^(−prec)` that is
//! guaranteed to contain the real number it stands for. All operations round
//! outward, so containment is preserved; consequently any comparison that
//! returns a definite answer is certified. Precision never refines itself —
//! callers that hit an inconclusive comparison recompute their whole
//! expression at doubled precision.

use crate::dyadic::Dyadic;
use crate::util::{div_ceil, div_floor, scaled_to_f64, sqrt_ceil, sqrt_floor};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A closed real interval `[lo/2^prec, hi/2^prec]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

impl Interval {
    /// Raw constructor; enforces `lo ≤ hi`.
    pub fn from_scaled(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "inverted interval endpoints");
        Interval { lo, hi, prec }
    }

    /// The exact point interval for an integer.
    pub fn from_int(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        let s = n << prec;
        Interval { lo: s.clone(), hi: s, prec }
    }

    /// The exact point interval for a dyadic fraction.
    pub fn from_dyadic(d: &Dyadic, prec: u32) -> Self {
        if prec >= d.exp {
            let s = &d.mant << (prec - d.exp);
            Interval { lo: s.clone(), hi: s, prec }
        } else {
            let shift = d.exp - prec;
            Interval {
                lo: &d.mant >> shift,
                hi: div_ceil(&d.mant, &(BigInt::from(1) << shift)),
                prec,
            }
        }
    }

    /// An enclosure of the rational `num/den` (`den ≠ 0`).
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let scaled = num << prec;
        Interval {
            lo: div_floor(&scaled, &den),
            hi: div_ceil(&scaled, &den),
            prec,
        }
    }

    /// The exact point interval for a finite `f64` (every finite float is a
    /// dyadic rational).
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "cannot build an interval from {x}");
        let bits = x.to_bits();
        let sign: i128 = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac as i128, -1074i64) // subnormal
        } else {
            (((1u64 << 52) | frac) as i128, biased - 1075)
        };
        let mant = BigInt::from(sign * mant);
        // value = mant · 2^exp; raise the precision if needed so the
        // resulting interval is always an exact point. Normalizing first keeps
        // the raise minimal (0.0 and other low-precision floats would otherwise
        // drag every downstream computation up to 1074 fractional bits).
        let v = if exp >= 0 {
            Dyadic::new(mant << exp as u32, 0)
        } else {
            Dyadic::new(mant, (-exp) as u32)
        }
        .normalized();
        Interval::from_dyadic(&v, prec.max(v.exp))
    }

    pub fn zero(prec: u32) -> Self {
        Interval::from_int(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Interval::from_int(1, prec)
    }

    /// A certified enclosure of √2.
    pub fn sqrt2(prec: u32) -> Self {
        Interval::from_int(2, prec).sqrt()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_dyadic(&self) -> Dyadic {
        Dyadic::new(self.lo.clone(), self.prec)
    }

    pub fn hi_dyadic(&self) -> Dyadic {
        Dyadic::new(self.hi.clone(), self.prec)
    }

    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    /// Re-rounds to the given precision (outward if coarser, exact if finer).
    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let shift = prec - self.prec;
                Interval { lo: &self.lo << shift, hi: &self.hi << shift, prec }
            }
            Ordering::Less => {
                let shift = self.prec - prec;
                let den = BigInt::from(1) << shift;
                Interval {
                    lo: &self.lo >> shift,
                    hi: div_ceil(&self.hi, &den),
                    prec,
                }
            }
        }
    }

    fn aligned(&self, other: &Interval) -> (Interval, Interval) {
        let p = self.prec.max(other.prec);
        (self.with_prec(p), other.with_prec(p))
    }

    /// Widens both endpoints by `ulps` units in the last place.
    pub fn widened(&self, ulps: u64) -> Self {
        let u = BigInt::from(ulps);
        Interval { lo: &self.lo - &u, hi: &self.hi + &u, prec: self.prec }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// The certain sign: `Some(−1 | 0 | +1)` or `None` if undecided.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// `true` iff every `x ∈ self`, `y ∈ other` satisfy `x ≤ y`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        let (a, b) = self.aligned(other);
        a.hi <= b.lo
    }

    /// `true` iff every `x ∈ self`, `y ∈ other` satisfy `x < y`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        let (a, b) = self.aligned(other);
        a.hi < b.lo
    }

    pub fn certainly_ge(&self, other: &Interval) -> bool {
        other.certainly_le(self)
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        other.certainly_lt(self)
    }

    /// Certified three-way comparison, if the intervals do not overlap.
    pub fn cmp_certain(&self, other: &Interval) -> Option<Ordering> {
        if self.certainly_lt(other) {
            Some(Ordering::Less)
        } else if self.certainly_gt(other) {
            Some(Ordering::Greater)
        } else if self.is_point() && other.is_point() && {
            let (a, b) = self.aligned(other);
            a.lo == b.lo
        } {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Self {
        let (a, b) = self.aligned(other);
        Interval {
            lo: a.lo.min(b.lo),
            hi: a.hi.max(b.hi),
            prec: a.prec,
        }
    }

    /// Intersection, or `None` if provably disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Self> {
        let (a, b) = self.aligned(other);
        let lo = a.lo.max(b.lo);
        let hi = a.hi.min(b.hi);
        if lo <= hi {
            Some(Interval { lo, hi, prec: a.prec })
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Interval {
                lo: BigInt::zero(),
                hi: (-&self.lo).max(self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    /// Tight enclosure of `x²` over the interval (never negative).
    pub fn square(&self) -> Self {
        let p = self.prec;
        let l2 = &self.lo * &self.lo;
        let h2 = &self.hi * &self.hi;
        let (lo, hi) = if self.contains_zero() {
            (BigInt::zero(), l2.max(h2))
        } else {
            (l2.clone().min(h2.clone()), l2.max(h2))
        };
        let den = BigInt::from(1) << p;
        Interval {
            lo: div_floor(&lo, &den),
            hi: div_ceil(&hi, &den),
            prec: p,
        }
    }

    /// Exact multiplication by `2^k` (outward-rounded when shifting down).
    pub fn mul_pow2(&self, k: i32) -> Self {
        if k >= 0 {
            Interval {
                lo: &self.lo << k as u32,
                hi: &self.hi << k as u32,
                prec: self.prec,
            }
        } else {
            let shift = (-k) as u32;
            let den = BigInt::from(1) << shift;
            Interval {
                lo: &self.lo >> shift,
                hi: div_ceil(&self.hi, &den),
                prec: self.prec,
            }
        }
    }

    /// Certified enclosure of √x. The lower endpoint is clamped to 0 if the
    /// interval dips below zero (a convenience for quantities that are
    /// mathematically nonnegative); panics if the whole interval is negative.
    pub fn sqrt(&self) -> Self {
        assert!(
            !self.hi.is_negative(),
            "sqrt of a certainly negative interval"
        );
        let p = self.prec;
        let lo = if self.lo.is_negative() { BigInt::zero() } else { self.lo.clone() };
        // sqrt(v/2^p) = sqrt(v·2^p)/2^p.
        Interval {
            lo: sqrt_floor(&(&lo << p)),
            hi: sqrt_ceil(&(&self.hi << p)),
            prec: p,
        }
    }

    /// Width `hi − lo` as a dyadic number.
    pub fn width_dyadic(&self) -> Dyadic {
        Dyadic::new(&self.hi - &self.lo, self.prec)
    }

    /// Certifies that the relative width is at most `2^(−bits)`.
    /// Conservative: requires the interval to exclude zero.
    pub fn rel_width_le(&self, bits: u32) -> bool {
        let mag = if self.lo.is_positive() {
            self.lo.clone()
        } else if self.hi.is_negative() {
            -&self.hi
        } else {
            return false;
        };
        ((&self.hi - &self.lo) << bits) <= mag
    }

    /// Midpoint as `f64` (heuristic only, not certified).
    pub fn to_f64(&self) -> f64 {
        scaled_to_f64(&(&self.lo + &self.hi), -(self.prec as i64) - 1)
    }

    /// Lower endpoint as `f64` (rounded to nearest; heuristic only).
    pub fn lo_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, -(self.prec as i64))
    }

    /// Upper endpoint as `f64` (rounded to nearest; heuristic only).
    pub fn hi_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, -(self.prec as i64))
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]@2^-{}", self.lo_f64(), self.hi_f64(), self.prec)
    }
}

impl<'a, 'b> Add<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, rhs: &'b Interval) -> Interval {
        let (a, b) = self.aligned(rhs);
        Interval { lo: a.lo + b.lo, hi: a.hi + b.hi, prec: a.prec }
    }
}

impl<'a, 'b> Sub<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, rhs: &'b Interval) -> Interval {
        let (a, b) = self.aligned(rhs);
        Interval { lo: a.lo - b.hi, hi: a.hi - b.lo, prec: a.prec }
    }
}

impl<'a, 'b> Mul<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, rhs: &'b Interval) -> Interval {
        let (a, b) = self.aligned(rhs);
        let p = a.prec;
        let c1 = &a.lo * &b.lo;
        let c2 = &a.lo * &b.hi;
        let c3 = &a.hi * &b.lo;
        let c4 = &a.hi * &b.hi;
        let lo = c1.clone().min(c2.clone()).min(c3.clone()).min(c4.clone());
        let hi = c1.max(c2).max(c3).max(c4);
        let den = BigInt::from(1) << p;
        Interval {
            lo: div_floor(&lo, &den),
            hi: div_ceil(&hi, &den),
            prec: p,
        }
    }
}

impl<'a, 'b> Div<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn div(self, rhs: &'b Interval) -> Interval {
        assert!(
            rhs.sign().map_or(false, |s| s != 0),
            "interval division by a possibly-zero divisor"
        );
        let (a, b) = self.aligned(rhs);
        let p = a.prec;
        let num_lo = &a.lo << p;
        let num_hi = &a.hi << p;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for num in [&num_lo, &num_hi] {
            for den in [&b.lo, &b.hi] {
                let f = div_floor(num, den);
                let c = div_ceil(num, den);
                lo = Some(match lo {
                    None => f.clone(),
                    Some(cur) => cur.min(f.clone()),
                });
                hi = Some(match hi {
                    None => c.clone(),
                    Some(cur) => cur.max(c.clone()),
                });
            }
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap(), prec: p }
    }
}

crate::util::forward_binop!(Add, add, Interval);
crate::util::forward_binop!(Sub, sub, Interval);
crate::util::forward_binop!(Mul, mul, Interval);
crate::util::forward_binop!(Div, div, Interval);

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::from_f64(lo, 64).hull(&Interval::from_f64(hi, 64))
    }

    #[test]
    fn f64_round_trip_is_exact() {
        for x in [0.0, 1.0, -2.5, 0.1, 1e-10, -3.75e8, f64::MIN_POSITIVE] {
            let i = Interval::from_f64(x, 80);
            assert!(i.is_point() || x.abs() < 1e-18, "{x}");
            assert!((i.to_f64() - x).abs() <= x.abs() * 1e-15);
        }
    }

    #[test]
    fn arithmetic_encloses() {
        let a = iv(1.25, 1.5);
        let b = iv(-0.5, 0.25);
        let s = &a + &b;
        assert!(s.lo_f64() <= 0.75 && s.hi_f64() >= 1.75);
        let p = &a * &b;
        assert!(p.lo_f64() <= -0.75 && p.hi_f64() >= 0.375);
        let q = &a / &iv(2.0, 2.0);
        assert!(q.lo_f64() <= 0.625 && q.hi_f64() >= 0.75);
    }

    #[test]
    fn sqrt_certified() {
        let two = Interval::from_int(2, 100);
        let r = two.sqrt();
        let sq = &r * &r;
        assert!(sq.lo_f64() <= 2.0 && sq.hi_f64() >= 2.0);
        assert!(r.rel_width_le(90));
    }

    #[test]
    fn signs_and_comparisons() {
        let a = iv(0.5, 1.0);
        let b = iv(1.5, 2.0);
        assert!(a.certainly_lt(&b));
        assert!(!b.certainly_lt(&a));
        assert_eq!(a.sign(), Some(1));
        assert_eq!((-&a).sign(), Some(-1));
        assert_eq!((&a - &a).sign(), None); // width makes it straddle 0
        assert_eq!(Interval::zero(32).sign(), Some(0));
    }

    #[test]
    fn square_is_tight_at_zero() {
        let a = iv(-0.5, 0.25);
        let s = a.square();
        assert!(s.lo_f64() >= 0.0);
        assert!(s.hi_f64() >= 0.25 && s.hi_f64() <= 0.2500001);
    }

    #[test]
    fn precision_alignment() {
        let a = Interval::from_int(1, 16);
        let b = Interval::from_int(1, 64);
        let c = &a + &b;
        assert_eq!(c.prec(), 64);
        assert!(c.is_point());
        assert_eq!(c.to_f64(), 2.0);
    }
}
