//! Certified transcendental functions on [`Interval`].
//!
//! Strategy: monotone functions (exp, ln, atan) are evaluated at the two
//! dyadic endpoints with a tail-bounded series; sin and cos are evaluated at
//! the midpoint and widened by half the input width (|sin′|, |cos′| ≤ 1).
//! Every series keeps an explicit remainder bound, so the returned interval
//! always encloses the true value. π and ln 2 are computed by integer series
//! (Machin's formula resp. atanh(1/3)) and cached per precision.

use crate::dyadic::Dyadic;
use crate::interval::Interval;
use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

const GUARD: u32 = 32;

static PI_CACHE: Lazy<Mutex<HashMap<u32, Interval>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static LN2_CACHE: Lazy<Mutex<HashMap<u32, Interval>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Integer series for arctan(1/m), returned at the given precision.
/// Floor divisions lose at most one ulp per operation; the accumulated loss
/// and the series tail are folded into the returned width.
fn atan_inv(m: u64, prec: u32) -> Interval {
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut power = (BigInt::from(1) << prec) / BigInt::from(m);
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    let mut ops = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power /= &m2;
        j += 1;
        ops += 2;
    }
    // Tail after the loop is below one ulp; add it to the floor losses.
    Interval::from_scaled(&sum - BigInt::from(ops + 2), &sum + BigInt::from(ops + 2), prec)
}

/// Integer series for atanh(1/m) (`m ≥ 2`).
fn atanh_inv(m: u64, prec: u32) -> Interval {
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut power = (BigInt::from(1) << prec) / BigInt::from(m);
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    let mut ops = 0u64;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * j + 1);
        power /= &m2;
        j += 1;
        ops += 2;
    }
    // Tail Σ_{i>j} m^{−(2i+1)} < m^{−(2j+1)}·(1/(1−m⁻²)) is below 2 ulps here.
    Interval::from_scaled(&sum - BigInt::from(ops + 3), &sum + BigInt::from(ops + 3), prec)
}

impl Interval {
    /// Certified enclosure of π (Machin: π = 16·atan(1/5) − 4·atan(1/239)).
    pub fn pi(prec: u32) -> Interval {
        if let Some(v) = PI_CACHE.lock().unwrap().get(&prec) {
            return v.clone();
        }
        let wp = prec + GUARD;
        let v = (atan_inv(5, wp).mul_pow2(4) - atan_inv(239, wp).mul_pow2(2)).with_prec(prec);
        PI_CACHE.lock().unwrap().insert(prec, v.clone());
        v
    }

    /// Certified enclosure of ln 2 = 2·atanh(1/3).
    pub fn ln2(prec: u32) -> Interval {
        if let Some(v) = LN2_CACHE.lock().unwrap().get(&prec) {
            return v.clone();
        }
        let wp = prec + GUARD;
        let v = atanh_inv(3, wp).mul_pow2(1).with_prec(prec);
        LN2_CACHE.lock().unwrap().insert(prec, v.clone());
        v
    }

    /// Certified enclosure of e^x.
    pub fn exp(&self) -> Interval {
        let lo = exp_point(&self.lo_dyadic(), self.prec());
        let hi = exp_point(&self.hi_dyadic(), self.prec());
        lo.hull(&hi) // exp is increasing
    }

    /// Certified enclosure of ln x; panics unless x is certainly positive.
    pub fn ln(&self) -> Interval {
        assert_eq!(self.sign(), Some(1), "ln of a non-positive interval");
        let lo = ln_point(&self.lo_dyadic(), self.prec());
        let hi = ln_point(&self.hi_dyadic(), self.prec());
        lo.hull(&hi) // ln is increasing
    }

    /// Certified enclosure of sin x.
    pub fn sin(&self) -> Interval {
        let p = self.prec();
        let mid = Dyadic::new(self.lo_scaled() + self.hi_scaled(), p + 1);
        let half_width = Dyadic::new(self.hi_scaled() - self.lo_scaled(), p + 1);
        let center = sin_cos_point(&mid, p).0;
        widen_by(center, &half_width)
    }

    /// Certified enclosure of cos x.
    pub fn cos(&self) -> Interval {
        let p = self.prec();
        let mid = Dyadic::new(self.lo_scaled() + self.hi_scaled(), p + 1);
        let half_width = Dyadic::new(self.hi_scaled() - self.lo_scaled(), p + 1);
        let center = sin_cos_point(&mid, p).1;
        widen_by(center, &half_width)
    }

    /// Certified enclosure of atan x.
    pub fn atan(&self) -> Interval {
        let lo = atan_point(&Interval::from_dyadic(&self.lo_dyadic(), self.prec()));
        let hi = atan_point(&Interval::from_dyadic(&self.hi_dyadic(), self.prec()));
        lo.hull(&hi) // atan is increasing
    }

    /// Certified enclosure of atan2(y, x) ∈ (−π, π]. Returns `None` when the
    /// signs at hand cannot pin down the quadrant (caller should retry at
    /// higher precision).
    pub fn atan2(y: &Interval, x: &Interval) -> Option<Interval> {
        let p = x.prec().max(y.prec());
        match (x.sign(), y.sign()) {
            (Some(1), _) => Some((y / x).atan()),
            (Some(-1), Some(sy)) if sy != 0 => {
                let base = (y / x).atan();
                let pi = Interval::pi(p);
                Some(if sy > 0 { base + pi } else { base - pi })
            }
            (Some(-1), Some(0)) => Some(Interval::pi(p)),
            (_, Some(1)) => Some(Interval::pi(p).mul_pow2(-1) - (x / y).atan()),
            (_, Some(-1)) => Some(-Interval::pi(p).mul_pow2(-1) - (x / y).atan()),
            _ => None, // includes atan2(0, 0), which is undefined
        }
    }
}

/// `center + [−w, w]`.
fn widen_by(center: Interval, w: &Dyadic) -> Interval {
    debug_assert!(w.signum() >= 0);
    let wi = Interval::from_dyadic(w, center.prec());
    let err = (-&wi).hull(&wi);
    center + err
}

/// One-ulp interval `[n−1, n+1]·2^(−prec)` helper for series slop.
fn slop(prec: u32, ulps: u64) -> Interval {
    let u = BigInt::from(ulps);
    Interval::from_scaled(-u.clone(), u, prec)
}

fn exp_point(d: &Dyadic, prec: u32) -> Interval {
    let wp = prec + GUARD;
    let est = d.to_f64();
    assert!(
        est.abs() < 1e6,
        "exp argument unreasonably large: {est}"
    );
    let k = (est / std::f64::consts::LN_2).round() as i64;
    let x = Interval::from_dyadic(d, wp);
    let r = &x - &(Interval::ln2(wp) * Interval::from_int(k, wp));
    // |r| ≤ ln2/2 + slop < 0.36.
    let mut term = Interval::one(wp);
    let mut sum = Interval::one(wp);
    let mut n = 1i64;
    loop {
        term = &term * &r / Interval::from_int(n, wp);
        sum = sum + &term;
        let bound = term.abs();
        // Tail ≤ |term|·q/(1−q) with q = |r|/(n+1) < 0.36 ⇒ tail < 0.6·|term|.
        if bound.hi_scaled() <= &BigInt::from(1) {
            sum = sum + slop(wp, 2);
            break;
        }
        n += 1;
        assert!(n < 10_000, "exp series failed to converge");
    }
    let shifted = sum.mul_pow2(k as i32);
    shifted.with_prec(prec)
}

fn ln_point(d: &Dyadic, prec: u32) -> Interval {
    assert!(d.signum() > 0, "ln of non-positive point");
    let wp = prec + GUARD;
    // Normalize d = m·2^e with m ∈ [1, 2).
    let bits = d.mant.bits() as i64;
    let e = bits - 1 - d.exp as i64;
    let m = if e >= 0 {
        Dyadic::new(d.mant.clone(), d.exp + e as u32)
    } else {
        Dyadic::new(&d.mant << ((-e) as u32), d.exp)
    };
    debug_assert!(m >= Dyadic::from_int(1) && m < Dyadic::from_int(2));
    let mi = Interval::from_dyadic(&m, wp);
    let t = (&mi - Interval::one(wp)) / (&mi + Interval::one(wp)); // ∈ [0, 1/3]
    let t2 = t.square();
    let mut power = t.clone();
    let mut sum = t;
    let mut j = 1i64;
    loop {
        power = &power * &t2;
        let term = &power / Interval::from_int(2 * j + 1, wp);
        sum = sum + &term;
        if term.abs().hi_scaled() <= &BigInt::from(1) {
            // Tail ≤ term·t²/(1−t²) ≤ term/8.
            sum = sum + slop(wp, 2);
            break;
        }
        j += 1;
        assert!(j < 10_000, "ln series failed to converge");
    }
    let ln_m = sum.mul_pow2(1);
    (ln_m + Interval::ln2(wp) * Interval::from_int(e, wp)).with_prec(prec)
}

/// Sine and cosine at a dyadic point, via reduction modulo π/2.
fn sin_cos_point(d: &Dyadic, prec: u32) -> (Interval, Interval) {
    let wp = prec + GUARD;
    let est = d.to_f64();
    assert!(est.abs() < 1e12, "trig argument unreasonably large: {est}");
    let q = (est / std::f64::consts::FRAC_PI_2).round() as i64;
    let x = Interval::from_dyadic(d, wp);
    let half_pi = Interval::pi(wp).mul_pow2(-1);
    let r = &x - &(&half_pi * Interval::from_int(q, wp));
    // |r| ≤ π/4 + slop.
    let r2 = r.square();
    // sin(r) series.
    let mut term = r.clone();
    let mut sin_r = r.clone();
    let mut n = 1i64;
    loop {
        term = -(&term * &r2) / Interval::from_int((2 * n) * (2 * n + 1), wp);
        sin_r = sin_r + &term;
        if term.abs().hi_scaled() <= &BigInt::from(1) {
            sin_r = sin_r + slop(wp, 2);
            break;
        }
        n += 1;
        assert!(n < 10_000, "sin series failed to converge");
    }
    // cos(r) series.
    let mut term = Interval::one(wp);
    let mut cos_r = Interval::one(wp);
    let mut n = 1i64;
    loop {
        term = -(&term * &r2) / Interval::from_int((2 * n - 1) * (2 * n), wp);
        cos_r = cos_r + &term;
        if term.abs().hi_scaled() <= &BigInt::from(1) {
            cos_r = cos_r + slop(wp, 2);
            break;
        }
        n += 1;
        assert!(n < 10_000, "cos series failed to converge");
    }
    let (s, c) = match q.rem_euclid(4) {
        0 => (sin_r, cos_r),
        1 => (cos_r, -sin_r),
        2 => (-sin_r, -cos_r),
        _ => (-cos_r, sin_r),
    };
    (s.with_prec(prec), c.with_prec(prec))
}

fn atan_point(t: &Interval) -> Interval {
    let wp = t.prec() + GUARD;
    let mut t = t.with_prec(wp);
    let mut halvings = 0u32;
    // atan(t) = 2·atan(t/(1 + √(1+t²))): halve until the series is fast.
    while t.abs().hi_f64() > 0.25 {
        let denom = Interval::one(wp) + (Interval::one(wp) + t.square()).sqrt();
        t = &t / &denom;
        halvings += 1;
        assert!(halvings < 300, "atan argument reduction diverged");
    }
    let t2 = t.square();
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut j = 1i64;
    loop {
        power = &power * &t2;
        let term = &power / Interval::from_int(2 * j + 1, wp);
        if j % 2 == 1 {
            sum = sum - &term;
        } else {
            sum = sum + &term;
        }
        if term.abs().hi_scaled() <= &BigInt::from(1) {
            sum = sum + slop(wp, 2);
            break;
        }
        j += 1;
        assert!(j < 10_000, "atan series failed to converge");
    }
    sum.mul_pow2(halvings as i32).with_prec(wp - GUARD)
}
