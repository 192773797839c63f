//! Ellipses, uprightness, and the enclosing ellipse of a convex region.
//!
//! An ellipse is the set `{u : (u−p)† D (u−p) ≤ 1}` for a symmetric positive
//! definite matrix `D` and center `p`; its area is `π/√det D`. The
//! *uprightness* of a bounded convex set is the ratio of its area to the
//! area of its bounding box: a quantity invariant under scaling, and the
//! measure of how well-behaved bounding-box enumeration will be. For an
//! ellipse it has the closed form `up(E) = (π/4)·√(det D/(D11·D22))`.
//!
//! Matrix entries and centers are certified [`Interval`]s: every derived
//! quantity (area, bounding box, column slices, transforms by grid
//! operators) is an outer enclosure, so enumeration downstream never loses
//! solutions to rounding.

use ring_core::constants::NumericConstants;
use ring_core::Interval;

use crate::operator::GridOperator;
use crate::region::{quadratic_segment, Box2, ConvexRegion, Membership};

/// The ellipse `(u−p)† D (u−p) ≤ 1` with `D = [[d11, d12], [d12, d22]]`.
#[derive(Clone, Debug)]
pub struct Ellipse {
    d11: Interval,
    d12: Interval,
    d22: Interval,
    cx: Interval,
    cy: Interval,
}

impl Ellipse {
    /// Builds an ellipse, checking positive definiteness certifiably.
    pub fn new(d11: Interval, d12: Interval, d22: Interval, cx: Interval, cy: Interval) -> Self {
        assert!(
            matches!(d11.sign(), Some(s) if s > 0),
            "ellipse matrix must be certainly positive definite (d11)"
        );
        let det = &(&d11 * &d22) - &d12.square();
        assert!(
            matches!(det.sign(), Some(s) if s > 0),
            "ellipse matrix must be certainly positive definite (det)"
        );
        Ellipse { d11, d12, d22, cx, cy }
    }

    /// Convenience constructor from floating-point data (exact embedding).
    pub fn from_f64(prec: u32, d: [f64; 3], center: (f64, f64)) -> Self {
        Self::new(
            Interval::from_f64(d[0], prec),
            Interval::from_f64(d[1], prec),
            Interval::from_f64(d[2], prec),
            Interval::from_f64(center.0, prec),
            Interval::from_f64(center.1, prec),
        )
    }

    pub fn d11(&self) -> &Interval {
        &self.d11
    }

    pub fn d12(&self) -> &Interval {
        &self.d12
    }

    pub fn d22(&self) -> &Interval {
        &self.d22
    }

    pub fn center(&self) -> (&Interval, &Interval) {
        (&self.cx, &self.cy)
    }

    pub fn prec(&self) -> u32 {
        self.d11.prec()
    }

    pub fn det(&self) -> Interval {
        &(&self.d11 * &self.d22) - &self.d12.square()
    }

    /// Area `π/√det D`.
    pub fn area(&self) -> Interval {
        let prec = self.prec();
        &NumericConstants::at(prec).pi / &self.det().sqrt()
    }

    /// Skew `D12²/det D`: the anti-diagonal squared after normalizing the
    /// determinant to 1.
    pub fn skew(&self) -> Interval {
        &self.d12.square() / &self.det()
    }

    /// Uprightness `(π/4)·√(det D/(D11·D22))`.
    pub fn uprightness(&self) -> Interval {
        let prec = self.prec();
        let ratio = &self.det() / &(&self.d11 * &self.d22);
        &NumericConstants::at(prec).pi.mul_pow2(-2) * &ratio.sqrt()
    }

    /// Outer bounding box: center ± (√(D22/det), √(D11/det)).
    pub fn bbox(&self) -> Box2 {
        let det = self.det();
        let hx = (&self.d22 / &det).sqrt();
        let hy = (&self.d11 / &det).sqrt();
        Box2::new(
            (&self.cx - &hx).lo_dyadic(),
            (&self.cx + &hx).hi_dyadic(),
            (&self.cy - &hy).lo_dyadic(),
            (&self.cy + &hy).hi_dyadic(),
        )
    }

    /// The image ellipse `G(E) = {Gu : u ∈ E}`.
    ///
    /// Its matrix is `(G⁻¹)† D G⁻¹` (the action of `G⁻¹` on the right) and
    /// its center is `G·p`.
    pub fn transformed(&self, g: &GridOperator) -> Ellipse {
        let prec = self.prec();
        let inv = g.inverse();
        let t = |i, j| inv.entry_interval(i, j, prec);
        let (t00, t01, t10, t11) = (t(0, 0), t(0, 1), t(1, 0), t(1, 1));
        let m11 = &(&(&t00.square() * &self.d11)
            + &(&(&t00 * &t10).mul_pow2(1) * &self.d12))
            + &(&t10.square() * &self.d22);
        let m12 = &(&(&(&t00 * &t01) * &self.d11)
            + &(&(&(&t00 * &t11) + &(&t01 * &t10)) * &self.d12))
            + &(&(&t10 * &t11) * &self.d22);
        let m22 = &(&(&t01.square() * &self.d11)
            + &(&(&t01 * &t11).mul_pow2(1) * &self.d12))
            + &(&t11.square() * &self.d22);
        let gq = |i, j| g.entry_interval(i, j, prec);
        let ncx = &(&gq(0, 0) * &self.cx) + &(&gq(0, 1) * &self.cy);
        let ncy = &(&gq(1, 0) * &self.cx) + &(&gq(1, 1) * &self.cy);
        Ellipse::new(m11, m12, m22, ncx, ncy)
    }

    /// Scales the ellipse by a positive factor `r` about the origin:
    /// matrix `D/r²`, center `r·p`.
    pub fn scaled(&self, r: &Interval) -> Ellipse {
        let r2 = r.square();
        Ellipse::new(
            &self.d11 / &r2,
            &self.d12 / &r2,
            &self.d22 / &r2,
            r * &self.cx,
            r * &self.cy,
        )
    }

    /// Outer enclosure of `{y : (x, y) ∈ E}` for a fixed column `x`, or
    /// `None` when the column certainly misses the ellipse.
    pub fn column_range(&self, x: &Interval) -> Option<Interval> {
        let u = x - &self.cx;
        // D22·s² + 2·(D12·u)·s + (D11·u² − 1) ≤ 0 for s = y − cy.
        let prec = self.prec();
        let b = &self.d12 * &u;
        let c = &(&self.d11 * &u.square()) - &Interval::one(prec);
        let seg = quadratic_segment(&self.d22, &b, &c)?;
        Some(&seg + &self.cy)
    }
}

/// An ellipse viewed as a [`ConvexRegion`].
#[derive(Clone, Debug)]
pub struct EllipseRegion(pub Ellipse);

impl ConvexRegion for EllipseRegion {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership {
        let e = &self.0;
        let u = x - &e.cx;
        let v = y - &e.cy;
        let q = &(&(&e.d11 * &u.square()) + &(&(&e.d12 * &u) * &v).mul_pow2(1))
            + &(&e.d22 * &v.square());
        let one = Interval::one(x.prec());
        if q.certainly_le(&one) {
            Membership::Inside
        } else if q.certainly_gt(&one) {
            Membership::Outside
        } else {
            Membership::Unknown
        }
    }

    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval> {
        let e = &self.0;
        let px = p.0 - &e.cx;
        let py = p.1 - &e.cy;
        let a = &(&(&e.d11 * &d.0.square()) + &(&(&e.d12 * d.0) * d.1).mul_pow2(1))
            + &(&e.d22 * &d.1.square());
        let b = &(&(&e.d11 * &px) * d.0)
            + &(&(&e.d12 * &(&(&px * d.1) + &(&py * d.0))) + &(&(&e.d22 * &py) * d.1));
        let c = &(&(&(&e.d11 * &px.square())
            + &(&(&e.d12 * &px) * &py).mul_pow2(1))
            + &(&e.d22 * &py.square()))
            - &Interval::one(p.0.prec());
        quadratic_segment(&a, &b, &c)
    }

    fn bbox(&self) -> Box2 {
        self.0.bbox()
    }

    fn area(&self, _prec: u32) -> Interval {
        self.0.area()
    }
}

/// Certified uprightness of a region: `area(A)/area(BBox(A))`.
pub fn uprightness<R: ConvexRegion + ?Sized>(region: &R, prec: u32) -> Interval {
    let bbox = region.bbox();
    assert!(!bbox.is_degenerate(), "uprightness of a degenerate region");
    let box_area = bbox.area(prec);
    &region.area(prec) / &box_area
}

/// An ellipse containing the region, with `area(E) ≤ (π/2)·area(BBox(A))`.
///
/// This is the circumscribed ellipse of the bounding box scaled by `√2`:
/// for a box with half-widths `(w, h)` about its center, the matrix is
/// `diag(1/2w², 1/2h²)`, which touches all four corners. It is not the
/// minimal-area enclosing ellipse, but is within a constant factor of it —
/// enough for the enumeration bounds, at a fraction of the effort.
pub fn enclosing_ellipse<R: ConvexRegion + ?Sized>(region: &R, prec: u32) -> Ellipse {
    let bbox = region.bbox();
    assert!(!bbox.is_degenerate(), "enclosing ellipse of a degenerate region");
    let (cx, cy) = bbox.center();
    let w = Interval::from_dyadic(&bbox.width(), prec).mul_pow2(-1);
    let h = Interval::from_dyadic(&bbox.height(), prec).mul_pow2(-1);
    let half = Interval::one(prec).mul_pow2(-1);
    Ellipse::new(
        &half / &w.square(),
        Interval::zero(prec),
        &half / &h.square(),
        Interval::from_dyadic(&cx, prec),
        Interval::from_dyadic(&cy, prec),
    )
}
