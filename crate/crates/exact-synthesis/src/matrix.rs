//! Exact 2×2 matrices over the synthesis rings, circuit evaluation, and the
//! membership tests for the two gate-set characterizations.
//!
//! Two numerator rings cover the two gate sets:
//!
//! * [`TMatrix`] — entries in `Z[ω]` over a common denominator `√2^k`. The
//!   unitaries of this shape (equivalently, with entries in `Z[1/√2, i]`) are
//!   exactly the operators expressible over Clifford+`T`.
//! * [`VMatrix`] — entries in `Z[i]` over `√2^k·√5^ℓ`. The unitaries of this
//!   shape whose determinant is a power of `i` and whose least `√2`-exponent
//!   is at most 2 are exactly the operators expressible over Clifford+`V`;
//!   restricting further to `k = 0` and determinant `±1` gives Pauli+`V`.
//!
//! Matrices are kept in least-denominator-exponent normal form, so derived
//! equality is operator equality. Row-major entry order: `[a, b, c, d]` is
//! the matrix `[[a, b], [c, d]]`.

use num_bigint::BigInt;
use ring_core::denom::{reduce_denom_gauss, reduce_denom_sqrt2};
use ring_core::{GaussInt, Interval, ZOmega};
use std::fmt;

use crate::gate::{Circuit, Gate, GateTag};

/// `(1/√2^k)·[[m0, m1], [m2, m3]]` with `Z[ω]` numerators, in least terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TMatrix {
    pub m: [ZOmega; 4],
    pub k: u32,
}

impl TMatrix {
    /// Builds the matrix and reduces it to least terms. No unitarity is
    /// imposed here — membership checks need to inspect arbitrary matrices.
    pub fn new(m: [ZOmega; 4], k: u32) -> TMatrix {
        let mut m = m;
        let mut k = k;
        reduce_denom_sqrt2(&mut m, &mut k);
        TMatrix { m, k }
    }

    pub fn identity() -> TMatrix {
        TMatrix::new(
            [
                ZOmega::one(),
                ZOmega::zero(),
                ZOmega::zero(),
                ZOmega::one(),
            ],
            0,
        )
    }

    /// The exact matrix of a gate, or `None` for the `V` gates (which have no
    /// representation over `Z[ω, 1/√2]`).
    pub fn gate(g: Gate) -> Option<TMatrix> {
        let one = ZOmega::one;
        let zero = ZOmega::zero;
        let base = match g.tag {
            GateTag::H => TMatrix::new([one(), one(), one(), -one()], 1),
            GateTag::S => TMatrix::new([one(), zero(), zero(), ZOmega::i()], 0),
            GateTag::T => TMatrix::new([one(), zero(), zero(), ZOmega::omega()], 0),
            GateTag::X => TMatrix::new([zero(), one(), one(), zero()], 0),
            GateTag::Y => TMatrix::new([zero(), -ZOmega::i(), ZOmega::i(), zero()], 0),
            GateTag::Z => TMatrix::new([one(), zero(), zero(), -one()], 0),
            GateTag::W => TMatrix::new([ZOmega::omega(), zero(), zero(), ZOmega::omega()], 0),
            GateTag::Vx | GateTag::Vy | GateTag::Vz => return None,
        };
        Some(if g.inverse { base.dagger() } else { base })
    }

    /// Exact matrix product `self · rhs`.
    pub fn mul(&self, rhs: &TMatrix) -> TMatrix {
        let a = &self.m;
        let b = &rhs.m;
        TMatrix::new(
            [
                &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
                &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
                &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
                &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
            ],
            self.k + rhs.k,
        )
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> TMatrix {
        TMatrix::new(
            [
                self.m[0].dagger(),
                self.m[2].dagger(),
                self.m[1].dagger(),
                self.m[3].dagger(),
            ],
            self.k,
        )
    }

    /// Exact unitarity: `M†M = 2^k·I` on the numerators.
    pub fn is_unitary(&self) -> bool {
        let d = self.dagger();
        let p = d.mul(self);
        p.k == 0
            && p.m[1].is_zero()
            && p.m[2].is_zero()
            && p.m[0] == ZOmega::one()
            && p.m[3] == ZOmega::one()
    }

    /// Determinant of the numerator matrix (the operator determinant times
    /// `2^k`).
    pub fn det_num(&self) -> ZOmega {
        &(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])
    }

    /// Least `√2`-exponent of the first column.
    pub fn column_exponent(&self) -> u32 {
        let mut col = [self.m[0].clone(), self.m[2].clone()];
        let mut k = self.k;
        reduce_denom_sqrt2(&mut col, &mut k);
        k
    }

    /// Is the first column exactly `e₁ = (1, 0)`?
    pub fn column_is_e1(&self) -> bool {
        let mut col = [self.m[0].clone(), self.m[2].clone()];
        let mut k = self.k;
        reduce_denom_sqrt2(&mut col, &mut k);
        k == 0 && col[0] == ZOmega::one() && col[1].is_zero()
    }

    /// Certified enclosures of the four entries at the given precision,
    /// row-major, as (re, im) pairs.
    pub fn to_interval_entries(&self, prec: u32) -> [(Interval, Interval); 4] {
        let scale = pow_interval_sqrt2(self.k, prec);
        self.m.clone().map(|e| {
            let (re, im) = e.to_interval_complex(prec);
            (&re / &scale, &im / &scale)
        })
    }

    /// Floating-point approximations of the four entries, row-major.
    pub fn to_f64_entries(&self) -> [(f64, f64); 4] {
        let scale = 2f64.powi(self.k as i32).sqrt();
        self.m.clone().map(|e| {
            let (re, im) = e.to_f64_complex();
            (re / scale, im / scale)
        })
    }
}

impl fmt::Display for TMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(1/√2^{})·[[{:?}, {:?}], [{:?}, {:?}]]",
            self.k, self.m[0], self.m[1], self.m[2], self.m[3]
        )
    }
}

/// `(1/(√2^k·√5^ℓ))·[[m0, m1], [m2, m3]]` with Gaussian-integer numerators,
/// in least terms (`k` and `ℓ` move in steps of two: neither `√2` nor `√5`
/// lies in `Q(i)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VMatrix {
    pub m: [GaussInt; 4],
    pub k: u32,
    pub l: u32,
}

impl VMatrix {
    /// Builds the matrix and reduces it to least terms (no unitarity imposed).
    pub fn new(m: [GaussInt; 4], k: u32, l: u32) -> VMatrix {
        let mut m = m;
        let (mut k, mut l) = (k, l);
        reduce_denom_gauss(&mut m, &mut k, &mut l);
        VMatrix { m, k, l }
    }

    pub fn identity() -> VMatrix {
        VMatrix::new(
            [
                GaussInt::one(),
                GaussInt::zero(),
                GaussInt::zero(),
                GaussInt::one(),
            ],
            0,
            0,
        )
    }

    /// The exact matrix of a gate, or `None` for the `T` gate (which has no
    /// representation over `Z[i, 1/√2, 1/√5]`).
    pub fn gate(g: Gate) -> Option<VMatrix> {
        let one = GaussInt::one;
        let zero = GaussInt::zero;
        let base = match g.tag {
            GateTag::H => VMatrix::new([one(), one(), one(), -one()], 1, 0),
            GateTag::S => VMatrix::new([one(), zero(), zero(), GaussInt::i()], 0, 0),
            GateTag::X => VMatrix::new([zero(), one(), one(), zero()], 0, 0),
            GateTag::Y => VMatrix::new([zero(), -GaussInt::i(), GaussInt::i(), zero()], 0, 0),
            GateTag::Z => VMatrix::new([one(), zero(), zero(), -one()], 0, 0),
            GateTag::W => {
                // ω·I = ((1 + i)/√2)·I.
                let w = GaussInt::new(1, 1);
                VMatrix::new([w.clone(), zero(), zero(), w], 1, 0)
            }
            GateTag::Vx => VMatrix::new(
                [one(), GaussInt::new(0, 2), GaussInt::new(0, 2), one()],
                0,
                1,
            ),
            GateTag::Vy => VMatrix::new(
                [one(), GaussInt::new(2, 0), GaussInt::new(-2, 0), one()],
                0,
                1,
            ),
            GateTag::Vz => VMatrix::new(
                [
                    GaussInt::new(1, 2),
                    zero(),
                    zero(),
                    GaussInt::new(1, -2),
                ],
                0,
                1,
            ),
            GateTag::T => return None,
        };
        Some(if g.inverse { base.dagger() } else { base })
    }

    /// Exact matrix product `self · rhs`.
    pub fn mul(&self, rhs: &VMatrix) -> VMatrix {
        let a = &self.m;
        let b = &rhs.m;
        VMatrix::new(
            [
                &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
                &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
                &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
                &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
            ],
            self.k + rhs.k,
            self.l + rhs.l,
        )
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> VMatrix {
        VMatrix::new(
            [
                self.m[0].conj(),
                self.m[2].conj(),
                self.m[1].conj(),
                self.m[3].conj(),
            ],
            self.k,
            self.l,
        )
    }

    /// `2^k·5^ℓ`, the square of the denominator.
    pub fn scale_sq(&self) -> BigInt {
        BigInt::from(2).pow(self.k) * BigInt::from(5).pow(self.l)
    }

    /// Exact unitarity: `M†M = 2^k·5^ℓ·I` on the numerators.
    pub fn is_unitary(&self) -> bool {
        let d = self.dagger();
        let p = d.mul(self);
        p.k == 0
            && p.l == 0
            && p.m[1].is_zero()
            && p.m[2].is_zero()
            && p.m[0] == GaussInt::one()
            && p.m[3] == GaussInt::one()
    }

    /// Determinant of the numerator matrix (the operator determinant times
    /// `2^k·5^ℓ`).
    pub fn det_num(&self) -> GaussInt {
        &(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])
    }

    /// `Some(m)` iff the operator determinant is exactly `i^m`, `m ∈ 0..4`.
    pub fn det_power_of_i(&self) -> Option<u8> {
        let d = self.det_num();
        let s = GaussInt::new(self.scale_sq(), BigInt::from(0));
        (0..4u8).find(|&m| d == s.mul_i_pow(m))
    }

    /// Least `(√2, √5)`-exponents of the first column.
    pub fn column_exponents(&self) -> (u32, u32) {
        let mut col = [self.m[0].clone(), self.m[2].clone()];
        let (mut k, mut l) = (self.k, self.l);
        reduce_denom_gauss(&mut col, &mut k, &mut l);
        (k, l)
    }

    /// Is the first column exactly `e₁ = (1, 0)`?
    pub fn column_is_e1(&self) -> bool {
        let mut col = [self.m[0].clone(), self.m[2].clone()];
        let (mut k, mut l) = (self.k, self.l);
        reduce_denom_gauss(&mut col, &mut k, &mut l);
        k == 0 && l == 0 && col[0] == GaussInt::one() && col[1].is_zero()
    }

    /// Certified enclosures of the four entries at the given precision,
    /// row-major, as (re, im) pairs.
    pub fn to_interval_entries(&self, prec: u32) -> [(Interval, Interval); 4] {
        let scale = pow_interval_sqrt2(self.k, prec) * pow_interval_sqrt5(self.l, prec);
        self.m.clone().map(|e| {
            (
                &Interval::from_bigint(&e.re, prec) / &scale,
                &Interval::from_bigint(&e.im, prec) / &scale,
            )
        })
    }

    /// Floating-point approximations of the four entries, row-major.
    pub fn to_f64_entries(&self) -> [(f64, f64); 4] {
        let prec = 64 + 2 * self.k + 3 * self.l;
        self.to_interval_entries(prec)
            .map(|(re, im)| (re.to_f64(), im.to_f64()))
    }
}

impl fmt::Display for VMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(1/(√2^{}·√5^{}))·[[{:?}, {:?}], [{:?}, {:?}]]",
            self.k, self.l, self.m[0], self.m[1], self.m[2], self.m[3]
        )
    }
}

/// `√2^k` as a certified enclosure.
fn pow_interval_sqrt2(k: u32, prec: u32) -> Interval {
    // √2^k = 2^(k/2)·√2^(k mod 2); the integer part is exact.
    let half = Interval::from_bigint(&(BigInt::from(1) << (k / 2)), prec);
    if k % 2 == 1 {
        &half * &Interval::sqrt2(prec)
    } else {
        half
    }
}

/// `√5^ℓ` as a certified enclosure.
fn pow_interval_sqrt5(l: u32, prec: u32) -> Interval {
    let half = Interval::from_bigint(&BigInt::from(5).pow(l / 2), prec);
    if l % 2 == 1 {
        &half * &Interval::from_int(5, prec).sqrt()
    } else {
        half
    }
}

/// An exact matrix over one of the two synthesis rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingMatrix2 {
    V(VMatrix),
    T(TMatrix),
}

impl RingMatrix2 {
    pub fn is_unitary(&self) -> bool {
        match self {
            RingMatrix2::V(m) => m.is_unitary(),
            RingMatrix2::T(m) => m.is_unitary(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            RingMatrix2::V(m) => *m == VMatrix::identity(),
            RingMatrix2::T(m) => *m == TMatrix::identity(),
        }
    }

    pub fn to_interval_entries(&self, prec: u32) -> [(Interval, Interval); 4] {
        match self {
            RingMatrix2::V(m) => m.to_interval_entries(prec),
            RingMatrix2::T(m) => m.to_interval_entries(prec),
        }
    }

    pub fn to_f64_entries(&self) -> [(f64, f64); 4] {
        match self {
            RingMatrix2::V(m) => m.to_f64_entries(),
            RingMatrix2::T(m) => m.to_f64_entries(),
        }
    }

    pub fn as_v(&self) -> Option<&VMatrix> {
        match self {
            RingMatrix2::V(m) => Some(m),
            RingMatrix2::T(_) => None,
        }
    }

    pub fn as_t(&self) -> Option<&TMatrix> {
        match self {
            RingMatrix2::T(m) => Some(m),
            RingMatrix2::V(_) => None,
        }
    }
}

/// Why a word could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// The word contains both `T` and `V`-type gates; no common exact ring
    /// covers both.
    MixedGateSets,
    /// A gate with no exact matrix over the requested ring.
    UnsupportedGate { gate: Gate, ring: &'static str },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::MixedGateSets => {
                write!(f, "word mixes T and V gates; no common exact ring")
            }
            EvalError::UnsupportedGate { gate, ring } => {
                write!(f, "gate {gate} has no exact matrix over the {ring} ring")
            }
        }
    }
}

impl std::error::Error for EvalError {}

/// Evaluates a word over the `Z[ω]/√2^k` ring (T gate set; rejects V gates).
pub fn eval_t(c: &Circuit) -> Result<TMatrix, EvalError> {
    let mut acc = TMatrix::identity();
    for &g in &c.gates {
        let m = TMatrix::gate(g).ok_or(EvalError::UnsupportedGate {
            gate: g,
            ring: "Z[ω, 1/√2]",
        })?;
        acc = acc.mul(&m);
    }
    Ok(acc)
}

/// Evaluates a word over the `Z[i]/(√2^k·√5^ℓ)` ring (V gate set; rejects T).
pub fn eval_v(c: &Circuit) -> Result<VMatrix, EvalError> {
    let mut acc = VMatrix::identity();
    for &g in &c.gates {
        let m = VMatrix::gate(g).ok_or(EvalError::UnsupportedGate {
            gate: g,
            ring: "Z[i, 1/√2, 1/√5]",
        })?;
        acc = acc.mul(&m);
    }
    Ok(acc)
}

/// Evaluates a word over whichever ring its gates allow: words using V gates
/// go to the `V` ring, everything else (including pure Clifford words) to the
/// `T` ring.
pub fn eval(c: &Circuit) -> Result<RingMatrix2, EvalError> {
    let has_t = c.gates.iter().any(|g| g.is_t());
    let has_v = c.gates.iter().any(|g| g.is_v());
    match (has_t, has_v) {
        (true, true) => Err(EvalError::MixedGateSets),
        (_, true) => eval_v(c).map(RingMatrix2::V),
        _ => eval_t(c).map(RingMatrix2::T),
    }
}

/// An element `a + b·√5` of `Z[i][√5]`: the numerator ring of the ambient
/// extension `Z[i, 1/√2, 1/√5]` in which candidate matrices are presented to
/// the V-set membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientGauss {
    pub a: GaussInt,
    pub b: GaussInt,
}

impl AmbientGauss {
    pub fn new(a: GaussInt, b: GaussInt) -> AmbientGauss {
        AmbientGauss { a, b }
    }

    pub fn pure(a: GaussInt) -> AmbientGauss {
        AmbientGauss {
            a,
            b: GaussInt::zero(),
        }
    }
}

/// A 2×2 matrix over the ambient ring: entries `(a + b√5)/(√2^k·√5^ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientVMatrix {
    pub m: [AmbientGauss; 4],
    pub k: u32,
    pub l: u32,
}

/// Decides membership in the Clifford+V-representable group: the matrix must
/// in fact lie over `Z[i]/(√2^k·√5^ℓ)` (no residual `√5` in any numerator),
/// be unitary, have determinant a power of `i`, and have least `√2`-exponent
/// at most 2. Returns the normal form on success, whose `(k, ℓ)` are the
/// least exponents.
pub fn membership_v(u: &AmbientVMatrix) -> Option<VMatrix> {
    // An entry (a + b√5)/√5^ℓ with both parts nonzero lies outside Q(i)·√5^ℓ
    // for every choice of exponent parity, so it can never be rewritten with
    // a plain Gaussian numerator.
    if u.m.iter().any(|e| !e.a.is_zero() && !e.b.is_zero()) {
        return None;
    }
    let any_a = u.m.iter().any(|e| !e.a.is_zero());
    let any_b = u.m.iter().any(|e| !e.b.is_zero());
    let candidate = match (any_a, any_b) {
        // Rational parts and √5-parts demand opposite ℓ-parities; a mix is
        // not representable either.
        (true, true) => return None,
        (_, false) => VMatrix::new(u.m.clone().map(|e| e.a), u.k, u.l),
        (false, true) => {
            // (b·√5)/√5^ℓ = b/√5^(ℓ−1); for ℓ = 0 push a factor of 5 in.
            let nums = u.m.clone().map(|e| e.b);
            match u.l.checked_sub(1) {
                Some(l) => VMatrix::new(nums, u.k, l),
                None => {
                    let five = GaussInt::from_int(5);
                    VMatrix::new(nums.map(|n| &n * &five), u.k, 1)
                }
            }
        }
    };
    (candidate.is_unitary() && candidate.k <= 2 && candidate.det_power_of_i().is_some())
        .then_some(candidate)
}

/// Decides membership in the Clifford+T-representable group: every unitary
/// over `Z[ω]/√2^k` qualifies. Returns the normal form (least `k`) on
/// success.
pub fn membership_t(m: [ZOmega; 4], k: u32) -> Option<TMatrix> {
    let candidate = TMatrix::new(m, k);
    candidate.is_unitary().then_some(candidate)
}
