//! Grid operators: the linear maps used to deform grid problems.
//!
//! A grid operator is a real 2×2 matrix with entries of the form
//! `a + a′/√2` (`a, a′ ∈ Z`) that maps the relevant lattice into itself.
//! Two flavours appear:
//!
//! * operators preserving `Z[ω]` (viewed as a subset of R² via
//!   `u ↦ (Re u, Im u)`) — these satisfy two parity conditions: the integer
//!   parts have even sum, and the `1/√2` parts are congruent mod 2;
//! * integer matrices, which preserve `Z² = Z[i]`.
//!
//! Entries are stored exactly as `Z[√2]` numerators over a global
//! denominator `√2`, i.e. the matrix is `N/√2` with `N ∈ Z[√2]^{2×2}`.
//! Products, inverses (of *special* operators, those with determinant ±1),
//! the `√2`-conjugation `G ↦ G•`, and the `σ^k·G·σ^k` conjugation used by
//! the Step Lemma are all exact in this representation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use ring_core::{DyadicRoot2, GaussInt, Interval, ZOmega, ZRoot2};

use crate::region::{Box2, ConvexRegion, Membership};

/// An exact grid operator `N/√2`, `N ∈ Z[√2]^{2×2}` row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GridOperator {
    n: [ZRoot2; 4],
    zomega_ok: bool,
    zi_ok: bool,
}

/// Entry value `a + a′/√2` corresponds to the numerator `a′ + a·√2`, so in
/// `ZRoot2 { a, b }` terms the integer part of the entry is `b` and the
/// `1/√2` part is `a`.
fn flags(n: &[ZRoot2; 4]) -> (bool, bool) {
    let int_sum_even = (&(&n[0].b + &n[1].b) + &(&n[2].b + &n[3].b)).is_even();
    let p0 = n[0].a.is_even();
    let frac_congruent = n.iter().all(|e| e.a.is_even() == p0);
    let zomega_ok = int_sum_even && frac_congruent;
    let zi_ok = n.iter().all(|e| e.a.is_zero());
    (zomega_ok, zi_ok)
}

impl GridOperator {
    /// Builds an operator from the four `Z[√2]` numerators (row-major).
    ///
    /// Panics unless the result preserves `Z[ω]` or `Z²`.
    pub fn from_sqrt2_numerators(n: [ZRoot2; 4]) -> Self {
        let (zomega_ok, zi_ok) = flags(&n);
        assert!(
            zomega_ok || zi_ok,
            "matrix does not preserve Z[ω] or Z²: numerators {:?}",
            n
        );
        GridOperator { n, zomega_ok, zi_ok }
    }

    /// An integer matrix `[[a, b], [c, d]]` (preserves `Z²`).
    pub fn from_int_matrix(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        let m = |x: BigInt| ZRoot2::new(BigInt::zero(), x);
        Self::from_sqrt2_numerators([m(a.into()), m(b.into()), m(c.into()), m(d.into())])
    }

    pub fn identity() -> Self {
        Self::from_int_matrix(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// The numerator matrix `N` with `G = N/√2`.
    pub fn numerators(&self) -> &[ZRoot2; 4] {
        &self.n
    }

    /// Does the operator map `Z[ω]` into itself?
    pub fn preserves_zomega(&self) -> bool {
        self.zomega_ok
    }

    /// Is the operator an integer matrix (mapping `Z²` into itself)?
    pub fn preserves_zi(&self) -> bool {
        self.zi_ok
    }

    /// `det(N) = 2·det(G)`, exact.
    pub fn det_numerator(&self) -> ZRoot2 {
        &(&self.n[0] * &self.n[3]) - &(&self.n[1] * &self.n[2])
    }

    /// Special operators have determinant ±1.
    pub fn is_special(&self) -> bool {
        let d = self.det_numerator();
        d == ZRoot2::from_int(2) || d == ZRoot2::from_int(-2)
    }

    /// Matrix product; closed on grid operators of a common flavour.
    pub fn mul(&self, rhs: &GridOperator) -> GridOperator {
        let a = &self.n;
        let b = &rhs.n;
        // (N₁/√2)(N₂/√2) = (N₁N₂/√2)/√2, so the product's numerators are
        // N₁N₂/√2; divisibility is guaranteed by the closure of grid
        // operators under composition.
        let prod = [
            &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
            &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
            &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
            &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
        ];
        let n = prod.map(|e| {
            e.div_sqrt2()
                .expect("grid operator product left the N/√2 representation")
        });
        Self::from_sqrt2_numerators(n)
    }

    /// Inverse of a special operator (determinant ±1), again a grid operator.
    pub fn inverse(&self) -> GridOperator {
        let d = self.det_numerator();
        let n = if d == ZRoot2::from_int(2) {
            [self.n[3].clone(), -&self.n[1], -&self.n[2], self.n[0].clone()]
        } else if d == ZRoot2::from_int(-2) {
            [-&self.n[3], self.n[1].clone(), self.n[2].clone(), -&self.n[0]]
        } else {
            panic!("inverse requires a special grid operator (det ±1), got det·2 = {:?}", d)
        };
        Self::from_sqrt2_numerators(n)
    }

    /// The `√2`-conjugated operator `G•`, satisfying `(Gu)• = G•u•`.
    ///
    /// At the numerator level `G = N/√2` gives `G• = conj2(N)/(−√2)`, hence
    /// numerators `−conj2(N)`.
    pub fn bullet(&self) -> GridOperator {
        let n = [
            -&self.n[0].conj2(),
            -&self.n[1].conj2(),
            -&self.n[2].conj2(),
            -&self.n[3].conj2(),
        ];
        Self::from_sqrt2_numerators(n)
    }

    /// Transpose (= adjoint, since entries are real).
    pub fn transpose(&self) -> GridOperator {
        Self::from_sqrt2_numerators([
            self.n[0].clone(),
            self.n[2].clone(),
            self.n[1].clone(),
            self.n[3].clone(),
        ])
    }

    /// The conjugation `σ^k G σ^k` with `σ = λ^{−1/2}·diag(λ, 1)`.
    ///
    /// The half-integer powers of `λ` cancel: the result scales the corner
    /// entries, `[[λ^k·g11, g12], [g21, λ^{−k}·g22]]`, and is again a grid
    /// operator (exactly representable since `λ` is a unit of `Z[√2]`).
    pub fn sigma_conj(&self, k: i64) -> GridOperator {
        let lp = ZRoot2::lambda_pow(k);
        let ln = ZRoot2::lambda_pow(-k);
        Self::from_sqrt2_numerators([
            &self.n[0] * &lp,
            self.n[1].clone(),
            self.n[2].clone(),
            &self.n[3] * &ln,
        ])
    }

    /// Applies the operator to `u ∈ Z[ω]` (via its real coordinate pair).
    ///
    /// Returns `None` when the image is not in `Z[ω]`; for operators with
    /// [`GridOperator::preserves_zomega`] this always succeeds.
    pub fn apply_zomega(&self, u: &ZOmega) -> Option<ZOmega> {
        // coords_sqrt2 gives (√2·Re u, √2·Im u) ∈ Z[√2]²; the matrix acts
        // linearly, so it can be applied directly in the scaled frame.
        let (x, y) = u.coords_sqrt2();
        let wx = &(&self.n[0] * &x) + &(&self.n[1] * &y);
        let wy = &(&self.n[2] * &x) + &(&self.n[3] * &y);
        let xs = wx.div_sqrt2()?;
        let ys = wy.div_sqrt2()?;
        ZOmega::from_coords(&xs, &ys)
    }

    /// Applies an integer-matrix operator to `α ∈ Z[i]`.
    pub fn apply_gauss(&self, g: &GaussInt) -> Option<GaussInt> {
        if !self.zi_ok {
            return None;
        }
        // Entry value = n.b for integer matrices (numerator b·√2).
        let m = [&self.n[0].b, &self.n[1].b, &self.n[2].b, &self.n[3].b];
        Some(GaussInt::new(
            m[0] * &g.re + m[1] * &g.im,
            m[2] * &g.re + m[3] * &g.im,
        ))
    }

    /// Applies the operator to an exact point of the plane.
    pub fn apply_point(&self, x: &DyadicRoot2, y: &DyadicRoot2) -> (DyadicRoot2, DyadicRoot2) {
        let s = DyadicRoot2::inv_sqrt2();
        let e = |i: usize| DyadicRoot2::from_zroot2(&self.n[i]);
        let ox = (&(&e(0) * x) + &(&e(1) * y)) * &s;
        let oy = (&(&e(2) * x) + &(&e(3) * y)) * &s;
        (ox, oy)
    }

    /// Certified interval value of entry `(i, j)`.
    pub fn entry_interval(&self, i: usize, j: usize, prec: u32) -> Interval {
        let inv_sqrt2 = &Interval::one(prec) / &Interval::sqrt2(prec);
        &self.n[2 * i + j].to_interval(prec) * &inv_sqrt2
    }

    /// Floating-point matrix `[g11, g12, g21, g22]` (not certified).
    pub fn to_f64_matrix(&self) -> [f64; 4] {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        [
            self.n[0].to_f64() * s,
            self.n[1].to_f64() * s,
            self.n[2].to_f64() * s,
            self.n[3].to_f64() * s,
        ]
    }

    // ---- Named operators of the Step Lemma -------------------------------

    /// `R = (1/√2)·[[1, −1], [1, 1]]` (rotation by π/4).
    pub fn op_r() -> Self {
        let z = |a: i64, b: i64| ZRoot2::new(a, b);
        Self::from_sqrt2_numerators([z(1, 0), z(-1, 0), z(1, 0), z(1, 0)])
    }

    /// `K = (1/√2)·[[−λ⁻¹, −1], [λ, 1]]`.
    pub fn op_k() -> Self {
        let z = |a: i64, b: i64| ZRoot2::new(a, b);
        Self::from_sqrt2_numerators([z(1, -1), z(-1, 0), z(1, 1), z(1, 0)])
    }

    /// `A^n = [[1, −2n], [0, 1]]`.
    pub fn op_a_pow(n: i64) -> Self {
        let s = ZRoot2::sqrt2;
        Self::from_sqrt2_numerators([
            s(),
            ZRoot2::new(0, -2 * n),
            ZRoot2::zero(),
            s(),
        ])
    }

    /// `B^n = [[1, n√2], [0, 1]]`.
    pub fn op_b_pow(n: i64) -> Self {
        let s = ZRoot2::sqrt2;
        Self::from_sqrt2_numerators([s(), ZRoot2::new(2 * n, 0), ZRoot2::zero(), s()])
    }

    /// `X = [[0, 1], [1, 0]]`.
    pub fn op_x() -> Self {
        Self::from_int_matrix(0, 1, 1, 0)
    }

    /// `Z = [[1, 0], [0, −1]]`.
    pub fn op_z() -> Self {
        Self::from_int_matrix(1, 0, 0, -1)
    }

    /// Integer shear `[[1, n], [0, 1]]` (preserves `Z²`).
    pub fn shear_x(n: impl Into<BigInt>) -> Self {
        Self::from_int_matrix(BigInt::from(1), n.into(), BigInt::zero(), BigInt::from(1))
    }

    /// Integer shear `[[1, 0], [n, 1]]` (preserves `Z²`).
    pub fn shear_y(n: impl Into<BigInt>) -> Self {
        Self::from_int_matrix(BigInt::from(1), BigInt::zero(), n.into(), BigInt::from(1))
    }
}

impl std::fmt::Debug for GridOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(1/√2)·[[{:?}, {:?}], [{:?}, {:?}]]",
            self.n[0], self.n[1], self.n[2], self.n[3]
        )
    }
}

/// A convex region transformed by a special grid operator: `G(A) = {Gu}`.
///
/// Queries are answered by mapping points back through `G⁻¹`; the bounding
/// box is the outer hull of the transformed corners of the inner box. Area
/// is preserved because special operators have |det| = 1.
pub struct TransformedRegion<R> {
    inner: R,
    g: GridOperator,
    ginv: GridOperator,
}

impl<R: ConvexRegion> TransformedRegion<R> {
    pub fn new(inner: R, g: GridOperator) -> Self {
        assert!(g.is_special(), "region transform requires a special operator");
        let ginv = g.inverse();
        TransformedRegion { inner, g, ginv }
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    pub fn operator(&self) -> &GridOperator {
        &self.g
    }

    fn map_back(&self, x: &Interval, y: &Interval) -> (Interval, Interval) {
        let prec = x.prec();
        let t = |i, j| self.ginv.entry_interval(i, j, prec);
        (
            &(&t(0, 0) * x) + &(&t(0, 1) * y),
            &(&t(1, 0) * x) + &(&t(1, 1) * y),
        )
    }
}

impl<R: ConvexRegion> ConvexRegion for TransformedRegion<R> {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership {
        let (u, v) = self.map_back(x, y);
        self.inner.membership(&u, &v)
    }

    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval> {
        // G⁻¹(p + t·d) = G⁻¹p + t·G⁻¹d: same parameterization inside.
        let (px, py) = self.map_back(p.0, p.1);
        let (dx, dy) = self.map_back(d.0, d.1);
        self.inner.line_segment((&px, &py), (&dx, &dy))
    }

    fn bbox(&self) -> Box2 {
        let prec = 96;
        let inner = self.inner.bbox();
        let corners = [
            (&inner.x0, &inner.y0),
            (&inner.x0, &inner.y1),
            (&inner.x1, &inner.y0),
            (&inner.x1, &inner.y1),
        ];
        let mut xs: Option<Interval> = None;
        let mut ys: Option<Interval> = None;
        for (cx, cy) in corners {
            let x = Interval::from_dyadic(cx, prec);
            let y = Interval::from_dyadic(cy, prec);
            let gx = &(&self.g.entry_interval(0, 0, prec) * &x)
                + &(&self.g.entry_interval(0, 1, prec) * &y);
            let gy = &(&self.g.entry_interval(1, 0, prec) * &x)
                + &(&self.g.entry_interval(1, 1, prec) * &y);
            xs = Some(xs.map_or(gx.clone(), |h| h.hull(&gx)));
            ys = Some(ys.map_or(gy.clone(), |h| h.hull(&gy)));
        }
        let xs = xs.unwrap();
        let ys = ys.unwrap();
        Box2::new(xs.lo_dyadic(), xs.hi_dyadic(), ys.lo_dyadic(), ys.hi_dyadic())
    }

    fn area(&self, prec: u32) -> Interval {
        self.inner.area(prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named() -> Vec<(&'static str, GridOperator)> {
        vec![
            ("R", GridOperator::op_r()),
            ("K", GridOperator::op_k()),
            ("A", GridOperator::op_a_pow(1)),
            ("A^-3", GridOperator::op_a_pow(-3)),
            ("B", GridOperator::op_b_pow(1)),
            ("B^2", GridOperator::op_b_pow(2)),
            ("X", GridOperator::op_x()),
            ("Z", GridOperator::op_z()),
        ]
    }

    #[test]
    fn named_operators_are_special_zomega_operators() {
        for (name, g) in named() {
            assert!(g.preserves_zomega(), "{name} must preserve Z[ω]");
            assert!(g.is_special(), "{name} must have det ±1");
        }
    }

    #[test]
    fn product_inverse_bullet_consistency() {
        let g = GridOperator::op_r().mul(&GridOperator::op_k()).mul(&GridOperator::op_a_pow(2));
        assert!(g.is_special());
        assert!(g.mul(&g.inverse()).is_identity());
        // (GH)• = G•H•.
        let h = GridOperator::op_b_pow(-1).mul(&GridOperator::op_x());
        assert_eq!(g.mul(&h).bullet(), g.bullet().mul(&h.bullet()));
    }

    #[test]
    fn bullet_commutes_with_application() {
        let g = GridOperator::op_k().mul(&GridOperator::op_b_pow(2));
        let u = ZOmega::new(3, -1, 4, 2);
        let lhs = g.apply_zomega(&u).unwrap().bullet();
        let rhs = g.bullet().apply_zomega(&u.bullet()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_point_matches_apply_zomega() {
        // Compare by value: DyadicRoot2 representations need not agree.
        fn value_eq(a: &DyadicRoot2, b: &DyadicRoot2) -> bool {
            (a - b).is_zero()
        }
        let g = GridOperator::op_r().mul(&GridOperator::op_a_pow(-1));
        let u = ZOmega::new(2, 5, -3, 1);
        let v = g.apply_zomega(&u).unwrap();
        let (ux, uy) = u.coords_sqrt2();
        let s = DyadicRoot2::inv_sqrt2();
        let px = DyadicRoot2::from_zroot2(&ux) * &s;
        let py = DyadicRoot2::from_zroot2(&uy) * &s;
        let (gx, gy) = g.apply_point(&px, &py);
        let (vx, vy) = v.coords_sqrt2();
        assert!(value_eq(&gx, &(DyadicRoot2::from_zroot2(&vx) * &s)));
        assert!(value_eq(&gy, &(DyadicRoot2::from_zroot2(&vy) * &s)));
    }

    #[test]
    fn sigma_conjugation_exact() {
        // σ·R·σ has value matrix [[λ·r11, r12], [r21, λ⁻¹·r22]].
        let g = GridOperator::op_r().sigma_conj(1);
        let r = GridOperator::op_r();
        assert_eq!(g.numerators()[0], &r.numerators()[0] * &ZRoot2::lambda());
        assert_eq!(g.numerators()[1], r.numerators()[1]);
        assert_eq!(g.numerators()[3], &r.numerators()[3] * &ZRoot2::lambda_inv());
        assert!(g.preserves_zomega() && g.is_special());
        // Conjugation exponents add on a fixed operator.
        assert_eq!(g.sigma_conj(-1), r);
        assert_eq!(GridOperator::op_k().sigma_conj(3).sigma_conj(-3), GridOperator::op_k());
    }

    #[test]
    fn integer_shears_act_on_gauss() {
        let g = GridOperator::shear_x(2).mul(&GridOperator::shear_y(-1));
        assert!(g.preserves_zi() && g.is_special());
        let p = GaussInt::new(3, 4);
        let q = g.apply_gauss(&p).unwrap();
        // [[1,2],[0,1]]·[[1,0],[-1,1]] = [[-1, 2], [-1, 1]]; applied to (3,4).
        assert_eq!(q, GaussInt::new(5, 1));
    }
}
