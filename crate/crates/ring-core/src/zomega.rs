//! The cyclotomic ring `Z[ω]`, `ω = e^{iπ/4}` a primitive eighth root of unity.

use crate::gauss::GaussInt;
use crate::interval::Interval;
use crate::util::forward_binop;
use crate::zroot2::{bigint_to_f64, ZRoot2};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `c0 + c1·ω + c2·ω² + c3·ω³` of `Z[ω]`.
///
/// Since `ω⁴ = −1`, the powers `1, ω, ω², ω³` form a Z-basis. The ring
/// contains `i = ω²` and `√2 = ω − ω³`, hence both `Z[i]` and `Z[√2]`.
/// Two conjugations matter here:
///
/// * [`ZOmega::dagger`] — complex conjugation (`ω ↦ ω⁻¹ = −ω³`);
/// * [`ZOmega::bullet`] — the `√2 ↦ −√2` automorphism (`ω ↦ −ω`), which is
///   *not* continuous in the complex embedding and is the source of all the
///   two-sided grid constraints downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZOmega {
    pub c: [BigInt; 4],
}

impl ZOmega {
    pub fn new(
        c0: impl Into<BigInt>,
        c1: impl Into<BigInt>,
        c2: impl Into<BigInt>,
        c3: impl Into<BigInt>,
    ) -> Self {
        ZOmega { c: [c0.into(), c1.into(), c2.into(), c3.into()] }
    }

    pub fn zero() -> Self {
        ZOmega::new(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        ZOmega::new(1, 0, 0, 0)
    }

    pub fn omega() -> Self {
        ZOmega::new(0, 1, 0, 0)
    }

    pub fn i() -> Self {
        ZOmega::new(0, 0, 1, 0)
    }

    pub fn sqrt2() -> Self {
        ZOmega::new(0, 1, 0, -1)
    }

    /// `ω^j` for any integer exponent (`ω⁸ = 1`).
    pub fn omega_pow(j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let mut c = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        if j < 4 {
            c[j] = BigInt::one();
        } else {
            c[j - 4] = -BigInt::one();
        }
        ZOmega { c }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        ZOmega::new(n.into(), 0, 0, 0)
    }

    /// Embeds `a + bi ∈ Z[i]` via `i = ω²`.
    pub fn from_gauss(g: &GaussInt) -> Self {
        ZOmega::new(g.re.clone(), 0, g.im.clone(), 0)
    }

    /// Embeds `a + b√2 ∈ Z[√2]` via `√2 = ω − ω³`.
    pub fn from_zroot2(z: &ZRoot2) -> Self {
        ZOmega::new(z.a.clone(), z.b.clone(), 0, -z.b.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Complex conjugation: `(c0, c1, c2, c3)† = (c0, −c3, −c2, −c1)`.
    pub fn dagger(&self) -> Self {
        ZOmega::new(
            self.c[0].clone(),
            -&self.c[3],
            -&self.c[2],
            -&self.c[1],
        )
    }

    /// The `√2 ↦ −√2` automorphism: `(c0, c1, c2, c3)• = (c0, −c1, c2, −c3)`.
    pub fn bullet(&self) -> Self {
        ZOmega::new(
            self.c[0].clone(),
            -&self.c[1],
            self.c[2].clone(),
            -&self.c[3],
        )
    }

    /// Multiplication by `ω`.
    pub fn mul_omega(&self) -> Self {
        ZOmega::new(
            -&self.c[3],
            self.c[0].clone(),
            self.c[1].clone(),
            self.c[2].clone(),
        )
    }

    /// Multiplication by `ω^j`.
    pub fn mul_omega_pow(&self, j: i64) -> Self {
        let j = j.rem_euclid(8);
        let mut out = self.clone();
        for _ in 0..(j % 4) {
            out = out.mul_omega();
        }
        if j >= 4 {
            out = -out;
        }
        out
    }

    /// Multiplication by `i = ω²`.
    pub fn mul_i(&self) -> Self {
        ZOmega::new(
            -&self.c[2],
            -&self.c[3],
            self.c[0].clone(),
            self.c[1].clone(),
        )
    }

    /// Multiplication by `√2 = ω − ω³`.
    pub fn mul_sqrt2(&self) -> Self {
        let [a, b, c, d] = &self.c;
        ZOmega::new(b - d, a + c, b + d, c - a)
    }

    /// `true` iff `√2` divides `self` (componentwise parity condition
    /// `c0 ≡ c2` and `c1 ≡ c3` mod 2).
    pub fn divisible_sqrt2(&self) -> bool {
        (&self.c[0] - &self.c[2]).is_even() && (&self.c[1] - &self.c[3]).is_even()
    }

    /// Exact division by `√2`; `None` if not divisible.
    pub fn div_sqrt2(&self) -> Option<Self> {
        if !self.divisible_sqrt2() {
            return None;
        }
        let [a, b, c, d] = &self.c;
        Some(ZOmega::new(
            (b - d) / 2,
            (a + c) / 2,
            (b + d) / 2,
            (c - a) / 2,
        ))
    }

    /// Exact division by `2`; `None` if some component is odd.
    pub fn div_2(&self) -> Option<Self> {
        if self.c.iter().all(|x| x.is_even()) {
            let [a, b, c, d] = &self.c;
            Some(ZOmega::new(a / 2, b / 2, c / 2, d / 2))
        } else {
            None
        }
    }

    /// `|self|² = self†·self` as an element of `Z[√2]` (always real and ≥ 0).
    pub fn mag_sq(&self) -> ZRoot2 {
        (&self.dagger() * self)
            .to_zroot2()
            .expect("u†u is always real")
    }

    /// The rational integer norm `N(u) = |u|²·|u•|² ≥ 0` (multiplicative).
    pub fn norm(&self) -> BigInt {
        self.mag_sq().norm()
    }

    /// `true` iff `self` is a unit of `Z[ω]` (norm 1; the units are `±ω^j λ^k`).
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u64) -> ZOmega {
        let mut acc = ZOmega::one();
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

    /// Reinterprets a real element (`c2 = 0`, `c3 = −c1`) as `c0 + c1√2`.
    pub fn to_zroot2(&self) -> Option<ZRoot2> {
        if self.c[2].is_zero() && self.c[3] == -&self.c[1] {
            Some(ZRoot2 { a: self.c[0].clone(), b: self.c[1].clone() })
        } else {
            None
        }
    }

    /// Reinterprets a `Z[i]` element (`c1 = c3 = 0`) as `c0 + c2·i`.
    pub fn to_gauss(&self) -> Option<GaussInt> {
        if self.c[1].is_zero() && self.c[3].is_zero() {
            Some(GaussInt { re: self.c[0].clone(), im: self.c[2].clone() })
        } else {
            None
        }
    }

    /// Decomposes `self = x + y·i + t·ω` with `x, y ∈ Z[√2]` and `t ∈ {0, 1}`.
    pub fn decompose(&self) -> (ZRoot2, ZRoot2, bool) {
        let [a, b, c, d] = &self.c;
        if (b - d).is_even() {
            let x = ZRoot2 { a: a.clone(), b: (b - d) / 2 };
            let y = ZRoot2 { a: c.clone(), b: (b + d) / 2 };
            (x, y, false)
        } else {
            let (x, y, t) = (self - &ZOmega::omega()).decompose();
            debug_assert!(!t);
            (x, y, true)
        }
    }

    /// The `√2`-scaled coordinates `(x̂, ŷ) ∈ Z[√2]²` with
    /// `self = (x̂ + ŷ·i)/√2`, i.e. `x̂ = √2·Re(self)`, `ŷ = √2·Im(self)`.
    pub fn coords_sqrt2(&self) -> (ZRoot2, ZRoot2) {
        let [a, b, c, d] = &self.c;
        let x = ZRoot2 { a: b - d, b: a.clone() };
        let y = ZRoot2 { a: b + d, b: c.clone() };
        (x, y)
    }

    /// Inverse of [`ZOmega::coords_sqrt2`]: requires `x̂.a ≡ ŷ.a (mod 2)`.
    pub fn from_coords(x: &ZRoot2, y: &ZRoot2) -> Option<Self> {
        let (p, q, r, s) = (&x.a, &x.b, &y.a, &y.b);
        if (p - r).is_even() {
            Some(ZOmega::new(q.clone(), (p + r) / 2, s.clone(), (r - p) / 2))
        } else {
            None
        }
    }

    /// Exact division `self / d` in `Z[ω]`; `None` if `d ∤ self`.
    pub fn div_exact(&self, d: &ZOmega) -> Option<Self> {
        let nd = d.norm();
        if nd.is_zero() {
            return None;
        }
        // 1/d = d†·(d·d†)• / N(d).
        let aux = &d.dagger() * &ZOmega::from_zroot2(&d.mag_sq().conj2());
        let num = self * &aux;
        if num.c.iter().all(|x| (x % &nd).is_zero()) {
            let [a, b, c, e] = &num.c;
            Some(ZOmega::new(a / &nd, b / &nd, c / &nd, e / &nd))
        } else {
            None
        }
    }

    /// Euclidean division: `(q, r)` with `self = q·d + r`, `N(r) < N(d)`.
    ///
    /// The quotient is found by rounding the exact quotient's coordinates;
    /// `Z[ω]` is norm-Euclidean, so a remainder of smaller norm always exists
    /// among the lattice points adjacent to the exact quotient, and we select
    /// the candidate of smallest norm.
    pub fn div_rem_nearest(&self, d: &ZOmega) -> (ZOmega, ZOmega) {
        let nd = d.norm();
        assert!(!nd.is_zero(), "division by zero in Z[ω]");
        let aux = &d.dagger() * &ZOmega::from_zroot2(&d.mag_sq().conj2());
        let num = self * &aux;
        // Exact quotient coordinates are num / nd; search the surrounding
        // floor/ceil box for the best lattice quotient.
        let floors: Vec<BigInt> = num.c.iter().map(|x| x.div_floor(&nd)).collect();
        let mut best: Option<(ZOmega, ZOmega, BigInt)> = None;
        for mask in 0..16u32 {
            let q = ZOmega::new(
                &floors[0] + BigInt::from((mask >> 3) & 1),
                &floors[1] + BigInt::from((mask >> 2) & 1),
                &floors[2] + BigInt::from((mask >> 1) & 1),
                &floors[3] + BigInt::from(mask & 1),
            );
            let r = self - &(&q * d);
            let nr = r.norm();
            if best.as_ref().map_or(true, |(_, _, cur)| nr < *cur) {
                best = Some((q, r, nr));
            }
        }
        let (q, r, nr) = best.unwrap();
        assert!(
            nr < nd,
            "Euclidean division failed to reduce the norm (N(r) = {nr}, N(d) = {nd})"
        );
        (q, r)
    }

    /// Residues of the four coordinates modulo `m > 0`, in `0..m`.
    pub fn mod_small(&self, m: i64) -> [i64; 4] {
        use num_traits::ToPrimitive;
        let m_big = BigInt::from(m);
        let mut out = [0i64; 4];
        for (o, c) in out.iter_mut().zip(self.c.iter()) {
            *o = c.mod_floor(&m_big).to_i64().unwrap();
        }
        out
    }

    /// Certified complex enclosure `(Re, Im)` at the given precision.
    pub fn to_interval_complex(&self, prec: u32) -> (Interval, Interval) {
        let (x, y) = self.coords_sqrt2();
        // self = (x̂ + ŷ i)/√2; divide the exact Z[√2] coordinates by √2.
        let inv_sqrt2 = Interval::one(prec) / Interval::sqrt2(prec);
        (
            x.to_interval(prec) * inv_sqrt2.clone(),
            y.to_interval(prec) * inv_sqrt2,
        )
    }

    /// Floating-point estimate `(Re, Im)` (not certified).
    pub fn to_f64_complex(&self) -> (f64, f64) {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = &self.c;
        let (a, b, c, d) =
            (bigint_to_f64(a), bigint_to_f64(b), bigint_to_f64(c), bigint_to_f64(d));
        (a + (b - d) * s, c + (b + d) * s)
    }
}

impl fmt::Debug for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}ω + {}ω² + {}ω³)",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl fmt::Display for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl<'a, 'b> Add<&'b ZOmega> for &'a ZOmega {
    type Output = ZOmega;
    fn add(self, rhs: &'b ZOmega) -> ZOmega {
        ZOmega::new(
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        )
    }
}

impl<'a, 'b> Sub<&'b ZOmega> for &'a ZOmega {
    type Output = ZOmega;
    fn sub(self, rhs: &'b ZOmega) -> ZOmega {
        ZOmega::new(
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        )
    }
}

impl<'a, 'b> Mul<&'b ZOmega> for &'a ZOmega {
    type Output = ZOmega;
    fn mul(self, rhs: &'b ZOmega) -> ZOmega {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        // (Σ aᵢωⁱ)(Σ bⱼωʲ) with ω⁴ = −1 folded in.
        ZOmega::new(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        )
    }
}

forward_binop!(Add, add, ZOmega);
forward_binop!(Sub, sub, ZOmega);
forward_binop!(Mul, mul, ZOmega);

impl Neg for &ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega::new(-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3])
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn quartic_norm_reference(u: &ZOmega) -> BigInt {
        // (Σcᵢ²)² − 2(c3c2 + c2c1 + c1c0 − c3c0)²
        let [a, b, c, d] = &u.c;
        let s: BigInt = a * a + b * b + c * c + d * d;
        let t: BigInt = d * c + c * b + b * a - d * a;
        &s * &s - 2 * &t * &t
    }

    #[test]
    fn omega_powers_and_embeddings() {
        let w = ZOmega::omega();
        let mut p = ZOmega::one();
        for _ in 0..8 {
            p = &p * &w;
        }
        assert_eq!(p, ZOmega::one()); // ω⁸ = 1
        assert_eq!(&w * &w, ZOmega::i()); // ω² = i
        assert_eq!(
            &ZOmega::sqrt2() * &ZOmega::sqrt2(),
            ZOmega::from_int(2)
        ); // √2·√2 = 2
        assert_eq!(
            ZOmega::from_zroot2(&ZRoot2::sqrt2()),
            ZOmega::sqrt2()
        );
    }

    #[test]
    fn norm_formula_agrees_and_is_multiplicative() {
        let u = ZOmega::new(3, -1, 4, 2);
        let v = ZOmega::new(-2, 5, 0, 1);
        assert_eq!(u.norm(), quartic_norm_reference(&u));
        assert_eq!(v.norm(), quartic_norm_reference(&v));
        assert_eq!((&u * &v).norm(), u.norm() * v.norm());
        assert!(!u.norm().is_negative());
    }

    #[test]
    fn conjugations() {
        let u = ZOmega::new(3, -1, 4, 2);
        let v = ZOmega::new(-2, 5, 0, 1);
        // Both are ring homomorphisms and involutions.
        assert_eq!((&u * &v).dagger(), &u.dagger() * &v.dagger());
        assert_eq!((&u * &v).bullet(), &u.bullet() * &v.bullet());
        assert_eq!(u.dagger().dagger(), u);
        assert_eq!(u.bullet().bullet(), u);
        // They commute.
        assert_eq!(u.dagger().bullet(), u.bullet().dagger());
        // • negates √2 and fixes i.
        assert_eq!(ZOmega::sqrt2().bullet(), -ZOmega::sqrt2());
        assert_eq!(ZOmega::i().bullet(), ZOmega::i());
    }

    #[test]
    fn sqrt2_division_round_trip() {
        let u = ZOmega::new(3, -1, 4, 2);
        let v = u.mul_sqrt2();
        assert_eq!(v.div_sqrt2().unwrap(), u);
        // 1 is not divisible by √2.
        assert!(ZOmega::one().div_sqrt2().is_none());
        // Multiplying by √2 matches ring multiplication by ω − ω³.
        assert_eq!(v, &u * &ZOmega::sqrt2());
    }

    #[test]
    fn decompose_round_trip() {
        for c0 in -2i64..=2 {
            for c1 in -2i64..=2 {
                for c2 in -2i64..=2 {
                    for c3 in -2i64..=2 {
                        let u = ZOmega::new(c0, c1, c2, c3);
                        let (x, y, t) = u.decompose();
                        let rebuilt = &(&ZOmega::from_zroot2(&x)
                            + &(&ZOmega::from_zroot2(&y) * &ZOmega::i()))
                            + &if t { ZOmega::omega() } else { ZOmega::zero() };
                        assert_eq!(rebuilt, u);
                    }
                }
            }
        }
    }

    #[test]
    fn coords_round_trip() {
        let u = ZOmega::new(3, -1, 4, 2);
        let (x, y) = u.coords_sqrt2();
        assert_eq!(ZOmega::from_coords(&x, &y), Some(u.clone()));
        // Cross-check against the complex embedding.
        let (re, im) = u.to_f64_complex();
        assert!((x.to_f64() - re * std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((y.to_f64() - im * std::f64::consts::SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn euclidean_division_in_zomega() {
        let u = ZOmega::new(37, -111, 4, 29);
        let d = ZOmega::new(3, -1, 4, 2);
        let (q, r) = u.div_rem_nearest(&d);
        assert_eq!(&(&q * &d) + &r, u);
        assert!(r.norm() < d.norm());
    }

    #[test]
    fn exact_division_in_zomega() {
        let u = ZOmega::new(3, -1, 4, 2);
        let v = ZOmega::new(-2, 5, 0, 1);
        let p = &u * &v;
        assert_eq!(p.div_exact(&u), Some(v.clone()));
        assert_eq!(p.div_exact(&ZOmega::new(0, 0, 0, 7)), None);
    }
}
