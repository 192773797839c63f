//! Euclidean gcds in the rings `Z[i]`, `Z[√2]`, and `Z[ω]`.
//!
//! All three rings carry a division with remainder strictly smaller than the
//! divisor under the absolute norm, so the classical Euclidean algorithm
//! terminates and returns a greatest common divisor, unique up to a unit.

use ring_core::{GaussInt, ZOmega, ZRoot2};

/// A ring with Euclidean division `x = q·d + r`, `|N(r)| < |N(d)|`.
pub trait Euclidean: Clone {
    fn is_zero(&self) -> bool;
    fn div_rem(&self, d: &Self) -> (Self, Self);
}

impl Euclidean for GaussInt {
    fn is_zero(&self) -> bool {
        GaussInt::is_zero(self)
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.div_rem_nearest(d)
    }
}

impl Euclidean for ZRoot2 {
    fn is_zero(&self) -> bool {
        ZRoot2::is_zero(self)
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.div_rem_nearest(d)
    }
}

impl Euclidean for ZOmega {
    fn is_zero(&self) -> bool {
        ZOmega::is_zero(self)
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.div_rem_nearest(d)
    }
}

/// Greatest common divisor up to a unit. `None` when both arguments are zero
/// (every element divides 0, so no greatest divisor exists).
pub fn gcd_ring<T: Euclidean>(x: &T, y: &T) -> Option<T> {
    if x.is_zero() && y.is_zero() {
        return None;
    }
    let mut a = x.clone();
    let mut b = y.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Some(a)
}
