//! Skew reduction: uprighting ellipses with grid operators.
//!
//! Two related procedures live here. [`to_upright_zi`] makes a single
//! ellipse at least 1/2-upright using the integer shears `[[1,1],[0,1]]`
//! and `[[1,0],[1,1]]`, halving the skew every round — this serves the
//! `Z[i]` enumerator. [`to_upright_pair`] handles the harder `Z[ω]` case:
//! a *pair* of ellipses must be uprighted simultaneously by `(G, G•)`,
//! and the two bullet-conjugated actions fight each other. The way out is
//! the step lemma, [`step`], which for any pair state of skew ≥ `P`
//! produces a special grid operator shrinking the skew by the factor `Q`.
//!
//! A determinant-1 pair is stored as [`EllipsePairState`] via the
//! parameters `(b, e, z)` and `(β, ε, ζ)` of
//!
//! ```text
//! D = [ e·λ⁻ᶻ   b    ]        Δ = [ ε·λ⁻ᶽ   β    ]
//!     [   b    e·λᶻ  ]            [   β    ε·λᶽ  ]
//! ```
//!
//! with `λ = 1+√2`, `e = √(1+b²)`, `ε = √(1+β²)`; `skew = b² + β²` and
//! `bias = ζ − z`. The step operator is selected by a case analysis on
//! `(z, ζ)` after normalizing `bias ∈ [−1,1]` (a λ-power shift), `β ≥ 0`
//! (operator `Z`) and `z+ζ ≥ 0` (operator `X`): inside the square
//! `[−r, r]²` the rotation `R` works; in the two off-axis lobes `K` or
//! `K•`; in the remaining quadrant a power `Aⁿ` (for `b ≥ 0`) or `Bⁿ`
//! (for `b ≤ 0`) of a shear. The constants `(P, Q, r, a, b)` must satisfy
//! seven inequalities for the case bounds to hold; [`StepConstants::verify`]
//! re-derives every one of them in certified interval arithmetic, so the
//! contraction claim never rests on unchecked floating-point "facts".
//!
//! State evolution itself uses plain `f64`: only the *choice* of operator
//! depends on it, and every choice is validated downstream by certified
//! membership tests, so a misjudged borderline case costs a little
//! enumeration slack, never a wrong answer.

use ring_core::constants::NumericConstants;
use ring_core::Interval;

use crate::ellipse::Ellipse;
use crate::operator::GridOperator;

const LN_LAMBDA: f64 = 0.881373587019543; // ln(1+√2)
const LAMBDA: f64 = std::f64::consts::SQRT_2 + 1.0;

/// The five constants governing the step lemma.
///
/// `p` is the skew threshold below which stepping stops, `q` the
/// per-step contraction factor, and `r`, `a`, `b` the boundaries of the
/// case regions in the `(z, ζ)`-plane.
#[derive(Clone, Copy, Debug)]
pub struct StepConstants {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub a: f64,
    pub b: f64,
}

/// Default constants. Chosen (not derived): these values satisfy all the
/// inequalities checked by [`StepConstants::verify`], with worst margin
/// ≈ 0.05 on the A-case bound. Note `a` must be negative — the A-case
/// endpoint analysis needs `λᵃ < 1` — while `r > 1/2` keeps the R-square
/// covering the whole lower band of the strip.
pub const DEFAULT_STEP_CONSTANTS: StepConstants = StepConstants {
    p: 15.0,
    q: 0.9,
    r: 0.81,
    a: -0.3,
    b: 0.2,
};

impl StepConstants {
    /// Certifies, in interval arithmetic at `prec` bits, every inequality
    /// the step-lemma case analysis relies on. Returns the description of
    /// the first failing inequality, if any.
    ///
    /// With `sinl(x) = (λˣ−λ⁻ˣ)/2`, `cosl(x) = (λˣ+λ⁻ˣ)/2`,
    /// `g(x) = (1−2x)²`, `h(x) = (1−√2x)²`, `κ(x) = (√2−cosl(x))²`:
    ///
    /// 1. R-case: `(1 + 2/P)·sinl²(r) ≤ Q`.
    /// 2. K-case: `κ(x) + (2/P)·cosl²(y) ≤ Q` for all candidate extrema
    ///    `x ∈ {r−1, 1−a, 0}`, `y ∈ {r−1, 1−a}` of the interval
    ///    `[r−1, 1−a]` containing `z+1` and `ζ−1`.
    /// 3. A-case, `n = ⌊λᶜ/2⌋ ≥ 1`: `g(1/(4λ)) + 2/P ≤ Q`.
    /// 4. A-case, `n = 1`: `g(x) + (8/P)·λ²ᵃ ≤ Q` for `x ∈ {1/(2λ), λᵃ}`.
    /// 5. B-case, `n = ⌊λᶜ/√2⌋ ≥ 1`: `h(1/(2√2λ)) + 2/P ≤ Q`.
    /// 6. B-case, `n = 1`: `h(x) + (4/P)·λ²ᵇ ≤ Q` for `x ∈ {1/(√2λ), λᵇ}`.
    /// 7. Covering side conditions: `−r ≤ a`, `−b ≤ r−1`, `r ≥ 1/2`,
    ///    `λᵃ ≥ 1/2`, `√2·λ^(b+1) ≥ 1`, `Q < 1`, `P > 1`.
    ///
    /// Endpoint candidates suffice: `g` and `h` are convex, and the only
    /// interior critical points of `κ` are a zero (at `cosl = √2`) and
    /// `x = 0`, which list 2 includes.
    pub fn verify(&self, prec: u32) -> Result<(), String> {
        let nc = NumericConstants::at(prec);
        let iv = |x: f64| Interval::from_f64(x, prec);
        let one = Interval::one(prec);
        let q = iv(self.q);
        let lam_pow = |x: f64| nc.lambda_pow(&iv(x));
        let sinl = |x: f64| (&lam_pow(x) - &lam_pow(-x)).mul_pow2(-1);
        let cosl = |x: f64| (&lam_pow(x) + &lam_pow(-x)).mul_pow2(-1);
        let g = |x: &Interval| (&one - &x.mul_pow2(1)).square();
        let h = |x: &Interval| (&one - &(&nc.sqrt2 * x)).square();
        let kappa = |x: f64| (&nc.sqrt2 - &cosl(x)).square();
        let two_over_p = &iv(2.0) / &iv(self.p);

        let check = |label: &str, lhs: &Interval, rhs: &Interval| {
            if lhs.certainly_le(rhs) {
                Ok(())
            } else {
                Err(format!("step-constant inequality failed: {label}"))
            }
        };

        // 1. R-case.
        let lhs = &(&one + &two_over_p) * &sinl(self.r).square();
        check("(1+2/P)·sinl²(r) ≤ Q", &lhs, &q)?;

        // 2. K-case, over all extremum candidates.
        for x in [self.r - 1.0, 1.0 - self.a, 0.0] {
            for y in [self.r - 1.0, 1.0 - self.a] {
                let lhs = &kappa(x) + &(&two_over_p * &cosl(y).square());
                check("κ(x) + (2/P)·cosl²(y) ≤ Q", &lhs, &q)?;
            }
        }

        // 3./4. A-case.
        let quarter_lam_inv = &nc.lambda_inv.mul_pow2(-2);
        let lhs = &g(quarter_lam_inv) + &two_over_p;
        check("g(1/(4λ)) + 2/P ≤ Q", &lhs, &q)?;
        let lam_2a = lam_pow(2.0 * self.a);
        let eight_p_l2a = &(&iv(8.0) / &iv(self.p)) * &lam_2a;
        for x in [nc.lambda_inv.mul_pow2(-1), lam_pow(self.a)] {
            let lhs = &g(&x) + &eight_p_l2a;
            check("g(x) + (8/P)·λ²ᵃ ≤ Q for x ∈ {1/(2λ), λᵃ}", &lhs, &q)?;
        }

        // 5./6. B-case.
        let inv_s2l = &(&nc.inv_sqrt2 * &nc.lambda_inv);
        let lhs = &h(&inv_s2l.mul_pow2(-1)) + &two_over_p;
        check("h(1/(2√2λ)) + 2/P ≤ Q", &lhs, &q)?;
        let lam_2b = lam_pow(2.0 * self.b);
        let four_p_l2b = &(&iv(4.0) / &iv(self.p)) * &lam_2b;
        for x in [inv_s2l.clone(), lam_pow(self.b)] {
            let lhs = &h(&x) + &four_p_l2b;
            check("h(x) + (4/P)·λ²ᵇ ≤ Q for x ∈ {1/(√2λ), λᵇ}", &lhs, &q)?;
        }

        // 7. Side conditions.
        check("−r ≤ a", &iv(-self.r), &iv(self.a))?;
        check("−b ≤ r−1", &iv(-self.b), &iv(self.r - 1.0))?;
        check("1/2 ≤ r", &iv(0.5), &iv(self.r))?;
        check("1/2 ≤ λᵃ", &iv(0.5), &lam_pow(self.a))?;
        check("1 ≤ √2·λ^(b+1)", &one, &(&nc.sqrt2 * &lam_pow(self.b + 1.0)))?;
        check("Q < 1", &q, &one)?;
        check("1 < P", &one, &iv(self.p))?;
        Ok(())
    }
}

/// A pair of determinant-1 positive matrices in `(b, e, z), (β, ε, ζ)`
/// form; see the module docs for the layout.
#[derive(Clone, Copy, Debug)]
pub struct EllipsePairState {
    pub b: f64,
    pub e: f64,
    pub z: f64,
    pub beta: f64,
    pub eps: f64,
    pub zeta: f64,
}

/// Normalizes a symmetric positive `[d11, d12, d22]` to determinant 1 and
/// extracts `(b, e, z)`.
fn extract(m: [f64; 3]) -> (f64, f64, f64) {
    let det = m[0] * m[2] - m[1] * m[1];
    assert!(det > 0.0 && m[0] > 0.0, "pair state requires positive definite input");
    let s = det.sqrt();
    let b = m[1] / s;
    let e = (1.0 + b * b).sqrt();
    let z = ((m[2] / s).ln() - (m[0] / s).ln()) / (2.0 * LN_LAMBDA);
    (b, e, z)
}

/// `Gᵀ·M·G` for symmetric `M = [m11, m12, m22]` and row-major `G`.
fn congruence(m: [f64; 3], g: [f64; 4]) -> [f64; 3] {
    let [a, b, d] = m;
    let [g00, g01, g10, g11] = g;
    [
        a * g00 * g00 + 2.0 * b * g00 * g10 + d * g10 * g10,
        a * g00 * g01 + b * (g00 * g11 + g01 * g10) + d * g10 * g11,
        a * g01 * g01 + 2.0 * b * g01 * g11 + d * g11 * g11,
    ]
}

impl EllipsePairState {
    /// Builds the state of two positive matrices, each normalized to
    /// determinant 1 (the pair skew is scale invariant, so normalizing
    /// loses nothing).
    pub fn from_matrices(d: [f64; 3], delta: [f64; 3]) -> Self {
        let (b, e, z) = extract(d);
        let (beta, eps, zeta) = extract(delta);
        EllipsePairState { b, e, z, beta, eps, zeta }
    }

    /// State of the matrices of two ellipses (centers are irrelevant:
    /// skew and uprightness are translation invariant).
    pub fn from_ellipses(ea: &Ellipse, eb: &Ellipse) -> Self {
        Self::from_matrices(
            [ea.d11().to_f64(), ea.d12().to_f64(), ea.d22().to_f64()],
            [eb.d11().to_f64(), eb.d12().to_f64(), eb.d22().to_f64()],
        )
    }

    /// The two matrices `(D, Δ)` as `[m11, m12, m22]`.
    pub fn matrices(&self) -> ([f64; 3], [f64; 3]) {
        let lp = |x: f64| (x * LN_LAMBDA).exp();
        (
            [self.e * lp(-self.z), self.b, self.e * lp(self.z)],
            [self.eps * lp(-self.zeta), self.beta, self.eps * lp(self.zeta)],
        )
    }

    pub fn skew(&self) -> f64 {
        self.b * self.b + self.beta * self.beta
    }

    pub fn bias(&self) -> f64 {
        self.zeta - self.z
    }

    /// The `k`-shift: `z ↦ z−k`, `ζ ↦ ζ+k`, `β ↦ (−1)ᵏβ`. Preserves skew
    /// and adds `2k` to the bias. (Realized by the non-grid matrices
    /// `√λ⁻¹·diag(λ,1)` and `√λ⁻¹·diag(1,−λ)`, so it is a state
    /// operation, not an operator the caller could apply.)
    pub fn shifted(&self, k: i64) -> Self {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        EllipsePairState {
            b: self.b,
            e: self.e,
            z: self.z - k as f64,
            beta: sign * self.beta,
            eps: self.eps,
            zeta: self.zeta + k as f64,
        }
    }

    /// Acts by a grid operator: `D ↦ Gᵀ·D·G` and `Δ ↦ G•ᵀ·Δ·G•`, then
    /// re-normalizes the determinants (they are preserved exactly by a
    /// special operator; renormalizing merely absorbs rounding drift).
    pub fn apply(&mut self, g: &GridOperator) {
        let (d, delta) = self.matrices();
        let nd = congruence(d, g.to_f64_matrix());
        let ndelta = congruence(delta, g.bullet().to_f64_matrix());
        *self = Self::from_matrices(nd, ndelta);
    }
}

/// Why [`step`] refused to act.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepError {
    /// The skew is already below the threshold `P`; the caller must stop
    /// iterating (no operator is guaranteed to reduce skew further).
    SkewBelowThreshold,
}

impl std::fmt::Display for StepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepError::SkewBelowThreshold => {
                write!(f, "pair skew is below the step threshold")
            }
        }
    }
}

impl std::error::Error for StepError {}

/// One application of the step lemma: a special grid operator `G` with
/// `skew(S·G) ≤ Q·skew(S)`, valid whenever `skew(S) ≥ P`.
///
/// The returned operator is `σᵏ·N·G₀·σᵏ`: a λ-power conjugation realizing
/// the bias shift, the sign/order normalization `N ∈ {1, Z, X, ZX}`, and
/// the case operator `G₀ ∈ {R, K, K•, Aⁿ, Bⁿ}`. A small relative
/// tolerance on the threshold lets callers iterate down to `P` without
/// tripping on floating-point drift.
pub fn step(state: &EllipsePairState, c: &StepConstants) -> Result<GridOperator, StepError> {
    if state.skew() < c.p * (1.0 - 1e-6) {
        return Err(StepError::SkewBelowThreshold);
    }

    // Shift so that the bias lands in (−1, 1].
    let k = ((1.0 - state.bias()) / 2.0).floor() as i64;
    let mut s = state.shifted(k);

    // Normalize signs: β ≥ 0 via Z (negates b and β), then z+ζ ≥ 0 via X
    // (negates z and ζ). X and Z commute and neither disturbs what the
    // other fixed.
    let use_z = s.beta < 0.0;
    if use_z {
        s.b = -s.b;
        s.beta = -s.beta;
    }
    let use_x = s.z + s.zeta < 0.0;
    if use_x {
        s.z = -s.z;
        s.zeta = -s.zeta;
    }

    // Case dispatch on (z, ζ) within the strip |ζ−z| ≤ 1, z+ζ ≥ 0. The
    // strip bounds give min(z, ζ) ≥ −1/2 > −r, so the branches below
    // cover everything.
    let (z, zeta) = (s.z, s.zeta);
    let g0 = if s.b >= 0.0 {
        if z <= c.r && zeta <= c.r {
            GridOperator::op_r()
        } else if zeta > c.r && z <= -c.a {
            GridOperator::op_k()
        } else if z > c.r && zeta <= -c.a {
            GridOperator::op_k().bullet()
        } else {
            // z, ζ ≥ −a (using −r ≤ a ≤ max(z, ζ) bounds).
            let n = ((z.min(zeta) * LN_LAMBDA).exp() / 2.0).floor().max(1.0);
            GridOperator::op_a_pow(n as i64)
        }
    } else if z <= c.r && zeta <= c.r {
        GridOperator::op_r()
    } else {
        // z, ζ ≥ −b (using −b ≤ r−1 < max(z, ζ) − 1 ≤ min(z, ζ)).
        let n = ((z.min(zeta) * LN_LAMBDA).exp() / std::f64::consts::SQRT_2)
            .floor()
            .max(1.0);
        GridOperator::op_b_pow(n as i64)
    };

    let mut g = g0;
    if use_x {
        g = GridOperator::op_x().mul(&g);
    }
    if use_z {
        g = GridOperator::op_z().mul(&g);
    }
    let g = g.sigma_conj(k);

    debug_assert!(
        {
            let mut check = *state;
            check.apply(&g);
            check.skew() <= c.q * state.skew() * (1.0 + 1e-6)
        },
        "step operator failed to contract the skew"
    );
    Ok(g)
}

/// Reduces the pair `(EA, EB)` to a simultaneously upright pair: returns
/// a special grid operator `G` such that `G(EA)` and `G•(EB)` both have
/// uprightness at least `π/(4√(P+1))`.
///
/// Iterates the step lemma on the pair state until the skew drops below
/// `P`; if `G₁…G_m` are the step operators, the state ends at
/// `(Gᵗᵒᵗ)ᵀDGᵗᵒᵗ` with `Gᵗᵒᵗ = G₁⋯G_m`, which is the matrix of
/// `(Gᵗᵒᵗ)⁻¹(EA)` — hence the returned operator is the inverse of the
/// accumulated product.
pub fn to_upright_pair(ea: &Ellipse, eb: &Ellipse, c: &StepConstants) -> GridOperator {
    let mut state = EllipsePairState::from_ellipses(ea, eb);
    let mut acc = GridOperator::identity();
    let mut rounds = 0usize;
    while state.skew() > c.p * (1.0 - 1e-9) {
        let g = step(&state, c).expect("skew above threshold, step must succeed");
        state.apply(&g);
        acc = acc.mul(&g);
        rounds += 1;
        assert!(rounds < 10_000, "skew reduction failed to converge");
    }
    acc.inverse()
}

/// Makes a single ellipse at least 1/2-upright over `Z[i]`: returns a
/// special integer grid operator `G` with `up(G(E)) ≥ 1/2` (in fact
/// ≥ π/(4√2) ≈ 0.555).
///
/// Each round applies an integer shear transpose-conjugation to the
/// matrix `[[a, b], [b, d]]`: with `n = round(−b/a)` (smaller diagonal
/// side), the new anti-diagonal `na+b` satisfies `|na+b| ≤ a/2`, which at
/// skew ≥ 1 halves the skew. Rounds stop when `b² ≤ det`, i.e. the
/// normalized skew is below 1.
pub fn to_upright_zi(e: &Ellipse) -> GridOperator {
    let mut a = e.d11().to_f64();
    let mut b = e.d12().to_f64();
    let mut d = e.d22().to_f64();
    let det = a * d - b * b;
    assert!(det > 0.0 && a > 0.0, "uprighting requires a positive definite ellipse");

    let mut acc = GridOperator::identity();
    let mut rounds = 0usize;
    while b * b > det {
        let n = if a <= d {
            (-b / a).round()
        } else {
            (-b / d).round()
        };
        if n == 0.0 || !n.is_finite() {
            break; // |b| ≤ min(a,d)/2 already implies skew < det.
        }
        let n_i = n as i64;
        if a <= d {
            // M ← (Aⁿ)ᵀ·M·Aⁿ with A = [[1,1],[0,1]]: the step operator is
            // (Aⁿ)⁻¹ = A⁻ⁿ = shear_x(−n).
            d += n * (2.0 * b + n * a);
            b += n * a;
            acc = GridOperator::shear_x(-n_i).mul(&acc);
        } else {
            a += n * (2.0 * b + n * d);
            b += n * d;
            acc = GridOperator::shear_y(-n_i).mul(&acc);
        }
        rounds += 1;
        assert!(rounds < 10_000, "shear reduction failed to converge");
    }
    acc
}
