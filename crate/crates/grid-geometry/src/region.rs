//! Bounded convex regions of the plane with certified queries.
//!
//! The grid solvers only need three things from a region: a membership test
//! for exact points, the intersection of the region with a line (for
//! row/column enumeration), and a bounding box. All three are *certified*:
//! membership may answer [`Membership::Unknown`] when the working precision
//! cannot separate the point from the boundary, and the line/box queries
//! return outer enclosures, never undershooting the true set. Downstream
//! enumeration therefore stays complete regardless of precision; unknown
//! points are kept as candidates and rejected (or accepted) by later exact
//! checks.

use num_bigint::BigInt;
use ring_core::constants::NumericConstants;
use ring_core::{Dyadic, Interval};

/// Certified three-valued membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside,
    /// Not decidable at the precision of the query point. Enumerators treat
    /// these as candidates; exact downstream checks settle them.
    Unknown,
}

impl Membership {
    /// Inside or unknown: should this point be kept as a candidate?
    pub fn candidate(&self) -> bool {
        !matches!(self, Membership::Outside)
    }
}

/// A closed upright box `[x0, x1] × [y0, y1]` with exact dyadic corners.
///
/// Doubles as the bounding-box type (an outer enclosure of a region) and as
/// a region in its own right (an upright rectangle).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Box2 {
    pub x0: Dyadic,
    pub x1: Dyadic,
    pub y0: Dyadic,
    pub y1: Dyadic,
}

fn half(d: &Dyadic) -> Dyadic {
    Dyadic { mant: d.mant.clone(), exp: d.exp + 1 }
}

impl Box2 {
    pub fn new(x0: Dyadic, x1: Dyadic, y0: Dyadic, y1: Dyadic) -> Self {
        Box2 { x0, x1, y0, y1 }
    }

    pub fn from_ints(x0: i64, x1: i64, y0: i64, y1: i64) -> Self {
        Box2 {
            x0: Dyadic::from_int(x0),
            x1: Dyadic::from_int(x1),
            y0: Dyadic::from_int(y0),
            y1: Dyadic::from_int(y1),
        }
    }

    pub fn width(&self) -> Dyadic {
        &self.x1 - &self.x0
    }

    pub fn height(&self) -> Dyadic {
        &self.y1 - &self.y0
    }

    pub fn center(&self) -> (Dyadic, Dyadic) {
        (half(&(&self.x0 + &self.x1)), half(&(&self.y0 + &self.y1)))
    }

    /// Exact box area `(x1−x0)·(y1−y0)`.
    pub fn area_exact(&self) -> Dyadic {
        self.width() * self.height()
    }

    pub fn is_degenerate(&self) -> bool {
        self.width().signum() <= 0 || self.height().signum() <= 0
    }
}

/// A bounded convex region with non-empty interior.
///
/// Implementations must guarantee:
/// * `membership` never answers `Inside` for a point outside the closed
///   region, nor `Outside` for a point inside it;
/// * `line_segment(p, d)` returns an interval containing every `t` with
///   `p + t·d` in the region (an outer enclosure), or `None` only when the
///   intersection is certainly empty;
/// * `bbox` contains the region;
/// * `area` is a certified enclosure of the exact area.
pub trait ConvexRegion {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership;

    /// Outer enclosure of `{t : p + t·d ∈ region}`.
    ///
    /// The direction must be certainly non-zero in at least one coordinate;
    /// axis-aligned queries with exact directions are the intended use.
    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval>;

    fn bbox(&self) -> Box2;

    fn area(&self, prec: u32) -> Interval;
}

/// Exact dyadic constant as an interval at the query's precision.
pub(crate) fn ivd(d: &Dyadic, prec: u32) -> Interval {
    Interval::from_dyadic(d, prec)
}

/// One-dimensional clip state for `line_segment` implementations: exact
/// dyadic outer bounds on the parameter `t`, tightened constraint by
/// constraint.
pub(crate) struct ParamClip {
    lo: Option<Dyadic>,
    hi: Option<Dyadic>,
    empty: bool,
}

impl ParamClip {
    pub(crate) fn new() -> Self {
        ParamClip { lo: None, hi: None, empty: false }
    }

    /// Imposes the linear constraint `num + t·den ≥ 0`.
    ///
    /// When the sign of `den` is not certain the constraint is skipped —
    /// the enclosure only grows, which is sound. A constraint that is
    /// certainly infeasible (`den` exactly zero with `num` certainly
    /// negative) marks the whole segment empty.
    pub(crate) fn add_ge(&mut self, num: &Interval, den: &Interval) {
        match den.sign() {
            Some(s) if s > 0 => {
                // t ≥ −num/den: keep the relaxed (outer) lower bound.
                let bound = (-&(num / den)).lo_dyadic();
                if self.lo.as_ref().map_or(true, |cur| bound > *cur) {
                    self.lo = Some(bound);
                }
            }
            Some(s) if s < 0 => {
                let bound = (-&(num / den)).hi_dyadic();
                if self.hi.as_ref().map_or(true, |cur| bound < *cur) {
                    self.hi = Some(bound);
                }
            }
            Some(_) => {
                // den is exactly zero: constraint is `num ≥ 0` outright.
                if matches!(num.sign(), Some(s) if s < 0) {
                    self.empty = true;
                }
            }
            None => {}
        }
    }

    pub(crate) fn finish(self) -> Option<Interval> {
        if self.empty {
            return None;
        }
        let (lo, hi) = match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => panic!("line_segment: direction left the parameter unbounded"),
        };
        if hi < lo {
            return None;
        }
        let prec = 64;
        Some(Interval::from_dyadic(&lo, prec).hull(&Interval::from_dyadic(&hi, prec)))
    }
}

impl ConvexRegion for Box2 {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership {
        let prec = x.prec();
        let (x0, x1) = (ivd(&self.x0, prec), ivd(&self.x1, prec));
        let (y0, y1) = (ivd(&self.y0, prec), ivd(&self.y1, prec));
        if x.certainly_lt(&x0)
            || x.certainly_gt(&x1)
            || y.certainly_lt(&y0)
            || y.certainly_gt(&y1)
        {
            return Membership::Outside;
        }
        if x0.certainly_le(x)
            && x.certainly_le(&x1)
            && y0.certainly_le(y)
            && y.certainly_le(&y1)
        {
            return Membership::Inside;
        }
        Membership::Unknown
    }

    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval> {
        let prec = p.0.prec();
        let mut clip = ParamClip::new();
        // x0 ≤ px + t·dx  ⇔  (px − x0) + t·dx ≥ 0, and so on.
        clip.add_ge(&(p.0 - &ivd(&self.x0, prec)), d.0);
        clip.add_ge(&(&ivd(&self.x1, prec) - p.0), &-d.0);
        clip.add_ge(&(p.1 - &ivd(&self.y0, prec)), d.1);
        clip.add_ge(&(&ivd(&self.y1, prec) - p.1), &-d.1);
        clip.finish()
    }

    fn bbox(&self) -> Box2 {
        self.clone()
    }

    fn area(&self, prec: u32) -> Interval {
        ivd(&self.area_exact(), prec)
    }
}

/// A closed disk given by an exact dyadic center and radius.
#[derive(Clone, Debug)]
pub struct Disk {
    pub cx: Dyadic,
    pub cy: Dyadic,
    pub r: Dyadic,
}

impl Disk {
    pub fn new(cx: Dyadic, cy: Dyadic, r: Dyadic) -> Self {
        assert!(r.signum() > 0, "disk radius must be positive");
        Disk { cx, cy, r }
    }
}

impl ConvexRegion for Disk {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership {
        let prec = x.prec();
        let dx = x - &ivd(&self.cx, prec);
        let dy = y - &ivd(&self.cy, prec);
        let s = dx.square() + dy.square();
        let r2 = ivd(&(&self.r * &self.r), prec);
        if s.certainly_le(&r2) {
            Membership::Inside
        } else if s.certainly_gt(&r2) {
            Membership::Outside
        } else {
            Membership::Unknown
        }
    }

    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval> {
        let prec = p.0.prec();
        let px = p.0 - &ivd(&self.cx, prec);
        let py = p.1 - &ivd(&self.cy, prec);
        // |p + t·d|² ≤ r²: quadratic a·t² + 2b·t + c ≤ 0.
        let a = d.0.square() + d.1.square();
        let b = &(d.0 * &px) + &(d.1 * &py);
        let c = px.square() + py.square() - ivd(&(&self.r * &self.r), prec);
        quadratic_segment(&a, &b, &c)
    }

    fn bbox(&self) -> Box2 {
        Box2 {
            x0: &self.cx - &self.r,
            x1: &self.cx + &self.r,
            y0: &self.cy - &self.r,
            y1: &self.cy + &self.r,
        }
    }

    fn area(&self, prec: u32) -> Interval {
        let r = ivd(&self.r, prec);
        NumericConstants::at(prec).pi * r.square()
    }
}

/// Solves `a·t² + 2b·t + c ≤ 0` (with `a` certainly positive) into an outer
/// `t`-enclosure; `None` when the quadratic is certainly positive throughout.
pub(crate) fn quadratic_segment(a: &Interval, b: &Interval, c: &Interval) -> Option<Interval> {
    assert!(
        matches!(a.sign(), Some(s) if s > 0),
        "line direction is not certainly non-degenerate"
    );
    let disc = b.square() - (a * c);
    if matches!(disc.sign(), Some(s) if s < 0) {
        return None;
    }
    // Clamp the discriminant below by zero; the square root of the outer
    // enclosure keeps the result outer.
    let prec = disc.prec();
    let s = disc.hull(&Interval::zero(prec)).sqrt();
    let lo = ((-b - &s) / a).lo_dyadic();
    let hi = ((-b + &s) / a).hi_dyadic();
    Some(Interval::from_dyadic(&lo, 64).hull(&Interval::from_dyadic(&hi, 64)))
}

/// A closed convex polygon with exact dyadic vertices, counterclockwise.
#[derive(Clone, Debug)]
pub struct ConvexPolygon {
    verts: Vec<(Dyadic, Dyadic)>,
}

fn cross(o: &(Dyadic, Dyadic), u: &(Dyadic, Dyadic), v: &(Dyadic, Dyadic)) -> Dyadic {
    let ux = &u.0 - &o.0;
    let uy = &u.1 - &o.1;
    let vx = &v.0 - &o.0;
    let vy = &v.1 - &o.1;
    &(&ux * &vy) - &(&uy * &vx)
}

impl ConvexPolygon {
    /// Builds a polygon from its vertex list, which must be strictly convex;
    /// clockwise input is reversed to the counterclockwise convention.
    pub fn new(mut verts: Vec<(Dyadic, Dyadic)>) -> Self {
        assert!(verts.len() >= 3, "polygon needs at least three vertices");
        // Shoelace sign decides orientation; exact arithmetic throughout.
        let mut twice_area = Dyadic::zero();
        let n = verts.len();
        for i in 0..n {
            let p = &verts[i];
            let q = &verts[(i + 1) % n];
            twice_area = &twice_area + &(&(&p.0 * &q.1) - &(&p.1 * &q.0));
        }
        if twice_area.signum() < 0 {
            verts.reverse();
        }
        let poly = ConvexPolygon { verts };
        for i in 0..n {
            let o = &poly.verts[i];
            let u = &poly.verts[(i + 1) % n];
            let v = &poly.verts[(i + 2) % n];
            assert!(cross(o, u, v).signum() > 0, "vertices must be strictly convex");
        }
        poly
    }

    pub fn vertices(&self) -> &[(Dyadic, Dyadic)] {
        &self.verts
    }
}

impl ConvexRegion for ConvexPolygon {
    fn membership(&self, x: &Interval, y: &Interval) -> Membership {
        let prec = x.prec();
        let n = self.verts.len();
        let mut all_inside = true;
        for i in 0..n {
            let a = &self.verts[i];
            let b = &self.verts[(i + 1) % n];
            // Signed area of (a, b, p): non-negative for points inside.
            let ex = ivd(&(&b.0 - &a.0), prec);
            let ey = ivd(&(&b.1 - &a.1), prec);
            let px = x - &ivd(&a.0, prec);
            let py = y - &ivd(&a.1, prec);
            let c = &(&ex * &py) - &(&ey * &px);
            match c.sign() {
                Some(s) if s < 0 => return Membership::Outside,
                Some(_) => {}
                None => all_inside = false,
            }
        }
        if all_inside {
            Membership::Inside
        } else {
            Membership::Unknown
        }
    }

    fn line_segment(&self, p: (&Interval, &Interval), d: (&Interval, &Interval))
        -> Option<Interval> {
        let prec = p.0.prec();
        let n = self.verts.len();
        let mut clip = ParamClip::new();
        for i in 0..n {
            let a = &self.verts[i];
            let b = &self.verts[(i + 1) % n];
            // Constraint cross(b−a, p + t·d − a) ≥ 0, linear in t.
            let ex = ivd(&(&b.0 - &a.0), prec);
            let ey = ivd(&(&b.1 - &a.1), prec);
            let px = p.0 - &ivd(&a.0, prec);
            let py = p.1 - &ivd(&a.1, prec);
            let num = &(&ex * &py) - &(&ey * &px);
            let den = &(&ex * d.1) - &(&ey * d.0);
            clip.add_ge(&num, &den);
        }
        clip.finish()
    }

    fn bbox(&self) -> Box2 {
        let mut it = self.verts.iter();
        let first = it.next().expect("non-empty polygon");
        let (mut x0, mut x1) = (first.0.clone(), first.0.clone());
        let (mut y0, mut y1) = (first.1.clone(), first.1.clone());
        for (x, y) in it {
            if *x < x0 {
                x0 = x.clone();
            }
            if *x > x1 {
                x1 = x.clone();
            }
            if *y < y0 {
                y0 = y.clone();
            }
            if *y > y1 {
                y1 = y.clone();
            }
        }
        Box2 { x0, x1, y0, y1 }
    }

    fn area(&self, prec: u32) -> Interval {
        let n = self.verts.len();
        let mut twice = Dyadic::zero();
        for i in 0..n {
            let p = &self.verts[i];
            let q = &self.verts[(i + 1) % n];
            twice = &twice + &(&(&p.0 * &q.1) - &(&p.1 * &q.0));
        }
        ivd(&half(&twice), prec)
    }
}

/// Convenience: an exact dyadic point as an interval pair at `prec`.
pub fn point(x: &Dyadic, y: &Dyadic, prec: u32) -> (Interval, Interval) {
    (ivd(x, prec), ivd(y, prec))
}

/// Convenience: an integer point as an interval pair at `prec`.
pub fn int_point(x: &BigInt, y: &BigInt, prec: u32) -> (Interval, Interval) {
    (Interval::from_bigint(x, prec), Interval::from_bigint(y, prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64) -> Dyadic {
        Dyadic::from_int(n)
    }

    #[test]
    fn box_membership_and_area() {
        let b = Box2::from_ints(-1, 3, 0, 2);
        let prec = 64;
        let inside = point(&d(1), &d(1), prec);
        let outside = point(&d(5), &d(1), prec);
        let edge = point(&d(-1), &d(0), prec);
        assert_eq!(b.membership(&inside.0, &inside.1), Membership::Inside);
        assert_eq!(b.membership(&outside.0, &outside.1), Membership::Outside);
        // Exact corner of a closed box is inside.
        assert_eq!(b.membership(&edge.0, &edge.1), Membership::Inside);
        assert_eq!(b.area(prec).to_f64(), 8.0);
    }

    #[test]
    fn box_line_segment_clips_both_axes() {
        let b = Box2::from_ints(0, 4, 0, 2);
        let prec = 64;
        // Vertical line x = 3: t ranges over [0, 2].
        let p = point(&d(3), &d(0), prec);
        let dir = point(&d(0), &d(1), prec);
        let seg = b.line_segment((&p.0, &p.1), (&dir.0, &dir.1)).unwrap();
        assert!((seg.lo_f64() - 0.0).abs() < 1e-12);
        assert!((seg.hi_f64() - 2.0).abs() < 1e-12);
        // Vertical line x = 5 misses the box.
        let p = point(&d(5), &d(0), prec);
        assert!(b.line_segment((&p.0, &p.1), (&dir.0, &dir.1)).is_none());
    }

    #[test]
    fn disk_membership_boundary_unknown() {
        let disk = Disk::new(d(0), d(0), d(2));
        let prec = 64;
        let inside = point(&d(1), &d(1), prec);
        assert_eq!(disk.membership(&inside.0, &inside.1), Membership::Inside);
        let outside = point(&d(2), &d(1), prec);
        assert_eq!(disk.membership(&outside.0, &outside.1), Membership::Outside);
        // (2, 0) lies exactly on the circle; certified arithmetic cannot call
        // it strictly inside or outside at point precision — it is a
        // candidate either way.
        let edge = point(&d(2), &d(0), prec);
        assert!(disk.membership(&edge.0, &edge.1).candidate());
    }

    #[test]
    fn disk_line_segment_matches_chord() {
        let disk = Disk::new(d(0), d(0), d(5));
        let prec = 96;
        // Horizontal line y = 3 cuts x ∈ [−4, 4].
        let p = point(&d(0), &d(3), prec);
        let dir = point(&d(1), &d(0), prec);
        let seg = disk.line_segment((&p.0, &p.1), (&dir.0, &dir.1)).unwrap();
        assert!((seg.lo_f64() + 4.0).abs() < 1e-9);
        assert!((seg.hi_f64() - 4.0).abs() < 1e-9);
        // y = 6 misses.
        let p = point(&d(0), &d(6), prec);
        assert!(disk.line_segment((&p.0, &p.1), (&dir.0, &dir.1)).is_none());
    }

    #[test]
    fn polygon_queries_consistent_with_membership() {
        // Triangle (0,0), (4,0), (0,4); orientation given clockwise on
        // purpose to exercise the auto-reversal.
        let tri = ConvexPolygon::new(vec![(d(0), d(0)), (d(0), d(4)), (d(4), d(0))]);
        let prec = 64;
        assert_eq!(tri.area(prec).to_f64(), 8.0);
        let b = tri.bbox();
        assert_eq!(b, Box2::from_ints(0, 4, 0, 4));

        let inside = point(&d(1), &d(1), prec);
        assert_eq!(tri.membership(&inside.0, &inside.1), Membership::Inside);
        let outside = point(&d(3), &d(3), prec);
        assert_eq!(tri.membership(&outside.0, &outside.1), Membership::Outside);

        // Column x = 1 should cut the triangle at y ∈ [0, 3].
        let p = point(&d(1), &d(0), prec);
        let dir = point(&d(0), &d(1), prec);
        let seg = tri.line_segment((&p.0, &p.1), (&dir.0, &dir.1)).unwrap();
        assert!((seg.lo_f64() - 0.0).abs() < 1e-12);
        assert!((seg.hi_f64() - 3.0).abs() < 1e-12);
    }
}
