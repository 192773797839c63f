//! The one-dimensional grid problem over `Z[√2]`.
//!
//! Given finite closed intervals `A` and `B`, the problem asks for every
//! `u = a + b√2 ∈ Z[√2]` with `u ∈ A` and `u• ∈ B`, where `u• = a − b√2`.
//! Both constraints together pin `u` to a finite set: `a = (u + u•)/2` and
//! `b = (u − u•)/(2√2)` are trapped in finite ranges, and the solutions can
//! be listed with constant work per candidate.
//!
//! Everything here is exact. Interval endpoints are [`DyadicRoot2`] values
//! (`(p + q√2)/2^e`), which are closed under the λ-rescaling used below and
//! support exact floor/ceil and comparisons, so no solution is ever lost or
//! invented through rounding.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ring_core::{DyadicRoot2, ZRoot2};

/// A closed interval `[lo, hi]` with exact `(p + q√2)/2^e` endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridInterval {
    pub lo: DyadicRoot2,
    pub hi: DyadicRoot2,
}

impl GridInterval {
    pub fn new(lo: DyadicRoot2, hi: DyadicRoot2) -> Self {
        GridInterval { lo, hi }
    }

    pub fn from_ints(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Self {
        GridInterval {
            lo: DyadicRoot2::from_int(lo),
            hi: DyadicRoot2::from_int(hi),
        }
    }

    /// Empty means `hi < lo`; single points are allowed.
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn width(&self) -> DyadicRoot2 {
        &self.hi - &self.lo
    }

    /// Exact membership of a ring element.
    pub fn contains(&self, u: &ZRoot2) -> bool {
        let v = DyadicRoot2::from_zroot2(u);
        self.lo <= v && v <= self.hi
    }

    /// Translates both endpoints by `t`.
    pub fn translated(&self, t: &DyadicRoot2) -> Self {
        GridInterval { lo: &self.lo + t, hi: &self.hi + t }
    }

    /// Multiplies the interval by `−1` (endpoints swap).
    pub fn negated(&self) -> Self {
        GridInterval { lo: -&self.hi, hi: -&self.lo }
    }

    /// Multiplies both endpoints by `√2^k`, `k ≥ 0`.
    pub fn scaled_sqrt2_pow(&self, k: u32) -> Self {
        let f = |v: &DyadicRoot2| {
            let mut w = v.clone();
            if k % 2 == 1 {
                w = w.mul_sqrt2();
            }
            // Remaining factor 2^{k/2}: a dyadic shift.
            let p = &w.p << (k / 2);
            let q = &w.q << (k / 2);
            DyadicRoot2::new(p, q, w.exp)
        };
        GridInterval { lo: f(&self.lo), hi: f(&self.hi) }
    }
}

/// Enumerates all `u ∈ Z[√2]` with `u ∈ A` and `u• ∈ B`, in increasing order.
///
/// The interval pair is first rescaled by `(A, B) ↦ (λ⁻¹A, −λB)` (or its
/// inverse), which is a bijection on solutions (`(λ⁻¹u)• = −λ·u•` since
/// `λ• = −λ⁻¹`), until `λ⁻¹ ≤ |A| < 1`. In that normal form each candidate
/// `b`-coefficient admits at most one integer `a` with `a + b√2 ∈ A`, so the
/// run time is linear in the number of `b`-candidates.
pub fn one_d_grid(a: &GridInterval, b: &GridInterval) -> Vec<ZRoot2> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }

    let one = DyadicRoot2::from_int(1);
    let lambda_inv = DyadicRoot2::new(BigInt::from(-1), BigInt::one(), 0); // √2 − 1

    let (mut a0, mut a1) = (a.lo.clone(), a.hi.clone());
    let (mut b0, mut b1) = (b.lo.clone(), b.hi.clone());
    // Solutions of the rescaled problem map back as u ↦ λ^j·u.
    let mut j: i64 = 0;

    // A point interval cannot be brought into [λ⁻¹, 1); skip rescaling — the
    // per-b candidate interval then has width 0 and still admits ≤ 1 integer.
    // (Compare by value: endpoint representations need not be normalized.)
    if !(&a1 - &a0).is_zero() {
        while &a1 - &a0 >= one {
            a0 = a0.mul_lambda_inv();
            a1 = a1.mul_lambda_inv();
            let (n0, n1) = ((-&b1).mul_lambda(), (-&b0).mul_lambda());
            b0 = n0;
            b1 = n1;
            j += 1;
        }
        while &a1 - &a0 < lambda_inv {
            a0 = a0.mul_lambda();
            a1 = a1.mul_lambda();
            let (n0, n1) = ((-&b1).mul_lambda_inv(), (-&b0).mul_lambda_inv());
            b0 = n0;
            b1 = n1;
            j -= 1;
        }
    }

    // b = (u − u•)/(2√2) ∈ [(x0 − y1)/(2√2), (x1 − y0)/(2√2)], and
    // t/(2√2) = t·√2/4 stays exact.
    let b_lo = (&a0 - &b1).mul_sqrt2().div_pow2(2).ceil();
    let b_hi = (&a1 - &b0).mul_sqrt2().div_pow2(2).floor();

    let back = ZRoot2::lambda_pow(j);
    let mut out = Vec::new();
    let mut bb = b_lo;
    while bb <= b_hi {
        let bs = DyadicRoot2::new(BigInt::zero(), bb.clone(), 0); // b√2
        let a_lo = (&a0 - &bs).ceil();
        let a_hi = (&a1 - &bs).floor();
        let mut aa = a_lo;
        while aa <= a_hi {
            let u = ZRoot2::new(aa.clone(), bb.clone());
            // u ∈ A holds by construction; check u• ∈ B exactly.
            let uc = DyadicRoot2::from_zroot2(&u.conj2());
            if b0 <= uc && uc <= b1 {
                out.push(&back * &u);
            }
            aa += BigInt::one();
        }
        bb += BigInt::one();
    }

    out.sort_by(|u, v| DyadicRoot2::from_zroot2(u).cmp(&DyadicRoot2::from_zroot2(v)));
    out
}
