//! Small integer helpers shared across the crate.

/// Implements a binary operator for the owned/ref combinations by delegating
/// to the `&T op &T` implementation.
macro_rules! forward_binop {
    ($imp:ident, $method:ident, $t:ty) => {
        impl $imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a $t> for $t {
            type Output = $t;
            fn $method(self, rhs: &'a $t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<$t> for &'a $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Floor division `⌊a / b⌋` for `b ≠ 0` of either sign.
pub fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Ceiling division `⌈a / b⌉` for `b ≠ 0` of either sign.
pub fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

/// Round-to-nearest division (ties round up) for `b ≠ 0` of either sign.
/// The result `q` satisfies `|a − q·b| ≤ |b|/2`.
pub fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Normalize to a positive divisor, then ⌊(2a + b) / 2b⌋ rounds half-up.
    let (a, b) = if b.is_negative() {
        (-a.clone(), -b.clone())
    } else {
        (a.clone(), b.clone())
    };
    let num: BigInt = (a << 1usize) + &b;
    let den: BigInt = b << 1usize;
    num.div_floor(&den)
}

/// Floor of the square root of a nonnegative integer.
pub fn sqrt_floor(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "sqrt_floor of negative integer");
    n.sqrt()
}

/// Ceiling of the square root of a nonnegative integer.
pub fn sqrt_ceil(n: &BigInt) -> BigInt {
    let r = sqrt_floor(n);
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

/// `n · 2^e` as `f64`, staying clear of the intermediate overflow that a naive
/// `to_f64() / 2^e` hits once `e` exceeds the f64 exponent range.
pub(crate) fn scaled_to_f64(n: &BigInt, e: i64) -> f64 {
    use num_traits::ToPrimitive;
    if n.is_zero() {
        return 0.0;
    }
    let drop = (n.bits() as i64 - 64).max(0);
    let m = (n >> drop as u64).to_f64().unwrap_or(f64::NAN);
    let k = e + drop;
    let h = (k / 2) as i32;
    m * 2f64.powi(h) * 2f64.powi((k - h as i64) as i32)
}

/// Floor of `sign(q)·√(2q²)`, i.e. `⌊q·√2⌋` computed exactly.
pub fn floor_mul_sqrt2(q: &BigInt) -> BigInt {
    let two_q2 = 2 * q * q;
    if q.is_negative() {
        // ⌊−x⌋ = −⌈x⌉ and q√2 is irrational for q ≠ 0, so −⌊x⌋ − 1.
        -sqrt_floor(&two_q2) - 1
    } else if q.is_zero() {
        BigInt::zero()
    } else {
        sqrt_floor(&two_q2)
    }
}
