//! Scaled grid enumerators over `Z[i]` and `Z[ω]`.
//!
//! [`ScaledGridZi`] enumerates, for a bounded convex region `A`, every
//! `α ∈ Z[i]` with `α ∈ √2^k·√5^ℓ·A` (`k ∈ {0,1,2}`, `ℓ = 0, 1, 2, …`),
//! in order of increasing `ℓ` and then `k`. [`ScaledGridZomega`]
//! enumerates, for a pair of regions `(A, B)`, every `u ∈ Z[ω]` with
//! `u ∈ √2^k·A` and `u• ∈ (−√2)^k·B`, in order of increasing `k`. Both
//! sequences are infinite; consumers truncate them.
//!
//! The shape of both enumerators is the same: upright the region(s) with
//! a special grid operator, enumerate lattice candidates inside the easy
//! (upright) image — per-column slices for `Z[i]`, a pair of 1-D grid
//! problems per `ω`-coset for `Z[ω]` — then map candidates back and keep
//! the ones whose certified membership test does not fail. Points whose
//! membership is *unknown* at working precision are emitted: downstream
//! users run exact correctness checks anyway, and dropping a boundary
//! point would break the completeness guarantee that everything here is
//! built on.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::One;
use ring_core::{Dyadic, DyadicRoot2, GaussInt, Interval, ZOmega, ZRoot2};

use crate::ellipse::enclosing_ellipse;
use crate::one_dim::{one_d_grid, GridInterval};
use crate::operator::{GridOperator, TransformedRegion};
use crate::region::{Box2, ConvexRegion};
use crate::step::{to_upright_pair, to_upright_zi, DEFAULT_STEP_CONSTANTS};

/// A solution of a scaled grid problem, tagged with its scale exponents.
///
/// Invariant: the point lies in the correspondingly scaled region(s),
/// as established by a certified (interval) membership test — boundary
/// points at the "unknown" margin included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridSolution {
    /// `point ∈ √2^k·√5^ℓ·A` with `k ∈ {0, 1, 2}`.
    Zi { k: u8, l: u32, point: GaussInt },
    /// `point ∈ √2^k·A` and `point• ∈ (−√2)^k·B`.
    Zomega { k: u32, point: ZOmega },
}

impl GridSolution {
    /// One whitespace-separated text line per solution, for external
    /// plotting: `"k ℓ a b"` with the integer coordinates of a `Z[i]`
    /// point, or `"k c0 c1 c2 c3"` with the `ω`-power coefficients of a
    /// `Z[ω]` point.
    pub fn dump_line(&self) -> String {
        match self {
            GridSolution::Zi { k, l, point } => {
                format!("{} {} {} {}", k, l, point.re, point.im)
            }
            GridSolution::Zomega { k, point } => format!(
                "{} {} {} {} {}",
                k, point.c[0], point.c[1], point.c[2], point.c[3]
            ),
        }
    }
}

impl From<(u8, u32, GaussInt)> for GridSolution {
    fn from((k, l, point): (u8, u32, GaussInt)) -> Self {
        GridSolution::Zi { k, l, point }
    }
}

impl From<(u32, ZOmega)> for GridSolution {
    fn from((k, point): (u32, ZOmega)) -> Self {
        GridSolution::Zomega { k, point }
    }
}

/// `√2^k` as an interval: exact for even `k`, one outward-rounded
/// multiplication for odd `k`.
fn sqrt2_pow(k: u32, prec: u32) -> Interval {
    let even = Interval::one(prec).mul_pow2((k / 2) as i32);
    if k % 2 == 0 {
        even
    } else {
        &even * &Interval::sqrt2(prec)
    }
}

/// Outer integer range covered by the interval: `⌈lo⌉ ..= ⌊hi⌋` of the
/// outer dyadic bounds. Possibly empty (start > end).
fn int_range(seg: &Interval) -> (BigInt, BigInt) {
    (seg.lo_dyadic().ceil(), seg.hi_dyadic().floor())
}

// ---------------------------------------------------------------------
// Z[i]
// ---------------------------------------------------------------------

/// Infinite enumerator of the scaled grid problem over `Z[i]`; see the
/// module docs. Construct with a region and a working precision, consume
/// as an `Iterator` yielding `(k, ℓ, point)`.
pub struct ScaledGridZi<R: ConvexRegion> {
    trans: TransformedRegion<R>,
    ginv: GridOperator,
    /// Bounding box of `G(E)` for the enclosing ellipse `E ⊇ A` — tight
    /// because `G(E)` is upright, unlike the image of the bounding box
    /// of `A` itself, whose own box can be inflated by the shear.
    upright_box: Box2,
    prec: u32,
    l: u32,
    k: u8,
    pending: VecDeque<(u8, u32, GaussInt)>,
}

impl<R: ConvexRegion> ScaledGridZi<R> {
    pub fn new(region: R, prec: u32) -> Self {
        let ell = enclosing_ellipse(&region, prec);
        let g = to_upright_zi(&ell);
        let upright_box = ell.transformed(&g).bbox();
        let ginv = g.inverse();
        ScaledGridZi {
            trans: TransformedRegion::new(region, g),
            ginv,
            upright_box,
            prec,
            l: 0,
            k: 0,
            pending: VecDeque::new(),
        }
    }

    /// All solutions of the current `(ℓ, k)` block, in lexicographic
    /// `(re, im)` order.
    fn fill_block(&mut self) {
        let prec = self.prec;
        // scale² = 2^k·5^ℓ exactly; the scale itself as a tight interval.
        let s2 = BigInt::from(2).pow(self.k as u32) * BigInt::from(5).pow(self.l);
        let s = Interval::from_bigint(&s2, prec).sqrt();
        let inv_s = &Interval::one(prec) / &s;
        let zero = Interval::zero(prec);

        let mut block: Vec<(u8, u32, GaussInt)> = Vec::new();
        let (x_lo, x_hi) = {
            let lo = &s * &Interval::from_dyadic(&self.upright_box.x0, prec);
            let hi = &s * &Interval::from_dyadic(&self.upright_box.x1, prec);
            (lo.lo_dyadic().ceil(), hi.hi_dyadic().floor())
        };

        let mut x = x_lo;
        while x <= x_hi {
            // The candidates in column x of s·G(A): the slice of G(A)
            // along the vertical line through x/s, scaled back up by s.
            let px = &Interval::from_bigint(&x, prec) * &inv_s;
            if let Some(seg) = self.trans.line_segment((&px, &zero), (&zero, &inv_s)) {
                let (y_lo, y_hi) = int_range(&seg);
                let mut y = y_lo;
                while y <= y_hi {
                    let cand = GaussInt::new(x.clone(), y.clone());
                    let alpha = self
                        .ginv
                        .apply_gauss(&cand)
                        .expect("uprighting operator is an integer operator");
                    let mx = &Interval::from_bigint(&alpha.re, prec) * &inv_s;
                    let my = &Interval::from_bigint(&alpha.im, prec) * &inv_s;
                    if self.trans.inner().membership(&mx, &my).candidate() {
                        block.push((self.k, self.l, alpha));
                    }
                    y += 1;
                }
            }
            x += 1;
        }

        block.sort_by(|p, q| (&p.2.re, &p.2.im).cmp(&(&q.2.re, &q.2.im)));
        self.pending.extend(block);
    }
}

impl<R: ConvexRegion> Iterator for ScaledGridZi<R> {
    type Item = (u8, u32, GaussInt);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(sol) = self.pending.pop_front() {
                return Some(sol);
            }
            self.fill_block();
            if self.k == 2 {
                self.k = 0;
                self.l += 1;
            } else {
                self.k += 1;
            }
        }
    }
}

// ---------------------------------------------------------------------
// Z[ω]
// ---------------------------------------------------------------------

/// Inverse of `ZOmega::decompose`: rebuilds `u = x + y·i + t·ω` from the
/// `Z[√2]`-pair and the coset bit.
fn compose_zomega(x: &ZRoot2, y: &ZRoot2, t: bool) -> ZOmega {
    let t = BigInt::from(t as u8);
    ZOmega::new(
        x.a.clone(),
        &(&x.b + &y.b) + &t,
        y.a.clone(),
        &y.b - &x.b,
    )
}

fn dyadic_to_root2(d: &Dyadic) -> DyadicRoot2 {
    DyadicRoot2::new(d.mant.clone(), BigInt::from(0), d.exp)
}

fn box_to_grid_intervals(b: &Box2) -> (GridInterval, GridInterval) {
    (
        GridInterval::new(dyadic_to_root2(&b.x0), dyadic_to_root2(&b.x1)),
        GridInterval::new(dyadic_to_root2(&b.y0), dyadic_to_root2(&b.y1)),
    )
}

/// Infinite enumerator of the scaled grid problem over `Z[ω]`; see the
/// module docs. Construct with the two regions and a working precision,
/// consume as an `Iterator` yielding `(k, point)`.
pub struct ScaledGridZomega<RA: ConvexRegion, RB: ConvexRegion> {
    region_a: RA,
    region_b: RB,
    ginv: GridOperator,
    /// Bounding boxes of `G(EA)` and `G•(EB)` for the enclosing ellipses,
    /// as exact `(p+q√2)/2^e` intervals per axis.
    box_a: (GridInterval, GridInterval),
    box_b: (GridInterval, GridInterval),
    prec: u32,
    k: u32,
    pending: VecDeque<(u32, ZOmega)>,
}

impl<RA: ConvexRegion, RB: ConvexRegion> ScaledGridZomega<RA, RB> {
    pub fn new(region_a: RA, region_b: RB, prec: u32) -> Self {
        let ea = enclosing_ellipse(&region_a, prec);
        let eb = enclosing_ellipse(&region_b, prec);
        let g = to_upright_pair(&ea, &eb, &DEFAULT_STEP_CONSTANTS);
        let box_a = box_to_grid_intervals(&ea.transformed(&g).bbox());
        let box_b = box_to_grid_intervals(&eb.transformed(&g.bullet()).bbox());
        ScaledGridZomega {
            region_a,
            region_b,
            ginv: g.inverse(),
            box_a,
            box_b,
            prec,
            k: 0,
            pending: VecDeque::new(),
        }
    }

    /// All solutions at the current scale `k`, in lexicographic order of
    /// the `ω`-power coefficients.
    fn fill_block(&mut self) {
        let prec = self.prec;
        let k = self.k;

        // Candidate boxes at scale k, exactly: √2^k·BoxA and (−√2)^k·BoxB.
        let scale_b = |gi: &GridInterval| {
            let s = gi.scaled_sqrt2_pow(k);
            if k % 2 == 0 {
                s
            } else {
                s.negated()
            }
        };
        let ax = self.box_a.0.scaled_sqrt2_pow(k);
        let ay = self.box_a.1.scaled_sqrt2_pow(k);
        let bx = scale_b(&self.box_b.0);
        let by = scale_b(&self.box_b.1);

        let s2k = sqrt2_pow(k, prec);
        let b_sign = if k % 2 == 0 { 1 } else { -1 };

        let mut block: Vec<(u32, ZOmega)> = Vec::new();
        for t in [false, true] {
            // u = (x + t/√2) + (y + t/√2)i with u• = (x• − t/√2) + (y• − t/√2)i,
            // so the A-side constraint intervals shift by −t/√2 and the
            // B-side ones by +t/√2.
            let off = if t {
                DyadicRoot2::new(BigInt::from(0), BigInt::one(), 1) // 1/√2 = √2/2
            } else {
                DyadicRoot2::from_int(0)
            };
            let xs = one_d_grid(&ax.translated(&-&off), &bx.translated(&off));
            let ys = one_d_grid(&ay.translated(&-&off), &by.translated(&off));
            for x in &xs {
                for y in &ys {
                    let w = compose_zomega(x, y, t);
                    let u = self
                        .ginv
                        .apply_zomega(&w)
                        .expect("uprighting operator preserves Z[ω]");
                    // Certify u/√2^k ∈ A.
                    let (re, im) = u.to_interval_complex(prec);
                    if !self
                        .region_a
                        .membership(&(&re / &s2k), &(&im / &s2k))
                        .candidate()
                    {
                        continue;
                    }
                    // Certify u•/(−√2)^k ∈ B.
                    let ub = u.bullet();
                    let (rb, ib) = ub.to_interval_complex(prec);
                    let (rb, ib) = if b_sign < 0 { (-rb, -ib) } else { (rb, ib) };
                    if self
                        .region_b
                        .membership(&(&rb / &s2k), &(&ib / &s2k))
                        .candidate()
                    {
                        block.push((k, u));
                    }
                }
            }
        }

        block.sort_by(|p, q| p.1.c.cmp(&q.1.c));
        self.pending.extend(block);
    }
}

impl<RA: ConvexRegion, RB: ConvexRegion> Iterator for ScaledGridZomega<RA, RB> {
    type Item = (u32, ZOmega);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(sol) = self.pending.pop_front() {
                return Some(sol);
            }
            self.fill_block();
            self.k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::Disk;

    #[test]
    fn compose_decompose_roundtrip() {
        for c0 in -2i64..=2 {
            for c1 in -2i64..=2 {
                for c2 in -1i64..=1 {
                    for c3 in -1i64..=1 {
                        let u = ZOmega::new(c0, c1, c2, c3);
                        let (x, y, t) = u.decompose();
                        assert_eq!(compose_zomega(&x, &y, t), u);
                    }
                }
            }
        }
    }

    #[test]
    fn disk_block_zero_matches_hand_count() {
        // Disk of radius 1.5 at the origin: the ℓ=k=0 block must hold the
        // nine integer points with a² + b² ≤ 2.
        let disk = Disk::new(
            Dyadic::from_int(0),
            Dyadic::from_int(0),
            Dyadic::new(3, 1),
        );
        let sols: Vec<_> = ScaledGridZi::new(disk, 96)
            .take_while(|(k, l, _)| *l == 0 && *k == 0)
            .collect();
        assert_eq!(sols.len(), 9);
        for (_, _, p) in &sols {
            assert!(p.norm() <= BigInt::from(2));
        }
        // Lexicographic order within the block.
        let mut sorted = sols.clone();
        sorted.sort_by(|p, q| (&p.2.re, &p.2.im).cmp(&(&q.2.re, &q.2.im)));
        assert_eq!(sols, sorted);
    }

    #[test]
    fn zomega_block_zero_matches_hand_count() {
        // A = B = square [−1,1]². At k = 0 the solutions are the nine
        // Gaussian integers {−1,0,1}² (self-conjugate under •) plus the
        // four ω-coset points ±ω, ±ω³ = (±1±i)/√2, thirteen in all.
        let sq = |half: i64| {
            crate::region::Box2::from_ints(-half, half, -half, half)
        };
        let sols: Vec<_> = ScaledGridZomega::new(sq(1), sq(1), 96)
            .take_while(|(k, _)| *k == 0)
            .collect();
        assert!(sols.iter().any(|(_, u)| u.is_zero()));
        assert!(sols.iter().any(|(_, u)| *u == ZOmega::one()));
        assert!(sols.iter().any(|(_, u)| *u == ZOmega::omega()));
        assert!(sols.iter().any(|(_, u)| *u == -&ZOmega::omega_pow(3)));
        assert_eq!(sols.len(), 13);
    }
}
