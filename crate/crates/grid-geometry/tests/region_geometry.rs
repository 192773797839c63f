//! Uprightness, enclosing ellipses, and the ellipse transformation law,
//! validated against sampling oracles and closed forms.

use grid_geometry::{
    enclosing_ellipse, uprightness, Box2, ConvexPolygon, ConvexRegion, Disk, Ellipse,
    EllipseRegion, GridOperator, Membership,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{Dyadic, DyadicRoot2, Interval};

const PREC: u32 = 96;

fn d(n: i64) -> Dyadic {
    Dyadic::from_int(n)
}

fn dy(m: i64, e: u32) -> Dyadic {
    Dyadic::new(m, e)
}

fn half(x: &Dyadic) -> Dyadic {
    Dyadic::new(x.mant.clone(), x.exp + 1)
}

#[test]
fn uprightness_of_reference_regions() {
    let disk = Disk::new(d(0), d(0), d(2));
    assert!((uprightness(&disk, PREC).to_f64() - std::f64::consts::FRAC_PI_4).abs() < 1e-12);

    let rect = Box2::from_ints(-3, 5, 2, 4);
    assert!((uprightness(&rect, PREC).to_f64() - 1.0).abs() < 1e-12);

    // A right triangle fills half its bounding box.
    let tri = ConvexPolygon::new(vec![(d(0), d(0)), (d(4), d(0)), (d(0), d(4))]);
    assert!((uprightness(&tri, PREC).to_f64() - 0.5).abs() < 1e-12);
}

#[test]
fn ellipse_uprightness_matches_monte_carlo() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..2 {
        let p: f64 = rng.random_range(-1.2..1.2f64).exp();
        let r: f64 = rng.random_range(-1.2..1.2f64).exp();
        let t: f64 = rng.random_range(-0.9..0.9);
        let q = t * (p * r).sqrt();
        let c = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let region = EllipseRegion(Ellipse::from_f64(PREC, [p, q, r], c));
        let up = uprightness(&region, PREC).to_f64();

        // Uniform sampling over the bounding box: the hit rate estimates
        // the same area ratio the closed form computes.
        let b = region.bbox();
        let (x0, x1) = (b.x0.to_f64(), b.x1.to_f64());
        let (y0, y1) = (b.y0.to_f64(), b.y1.to_f64());
        let n = 150_000;
        let mut hits = 0u32;
        for _ in 0..n {
            let xi = Interval::from_f64(rng.random_range(x0..x1), 64);
            let yi = Interval::from_f64(rng.random_range(y0..y1), 64);
            if region.membership(&xi, &yi) == Membership::Inside {
                hits += 1;
            }
        }
        let ratio = hits as f64 / n as f64;
        assert!((ratio - up).abs() < 0.01, "Monte Carlo {ratio} vs closed form {up}");
    }
}

#[test]
fn enclosing_ellipse_of_square_and_disk() {
    // [−1,1]²: the circumscribed construction gives center 0, semi-axes
    // (√2, √2), and area (π/2)·(box area) exactly.
    let sq = Box2::from_ints(-1, 1, -1, 1);
    let e = enclosing_ellipse(&sq, PREC);
    assert!((e.d11().to_f64() - 0.5).abs() < 1e-12);
    assert!((e.d22().to_f64() - 0.5).abs() < 1e-12);
    assert!(e.d12().to_f64().abs() < 1e-12);
    assert!(e.center().0.to_f64().abs() < 1e-12);
    assert!(e.center().1.to_f64().abs() < 1e-12);
    assert!((e.area().to_f64() - 2.0 * std::f64::consts::PI).abs() < 1e-9);
    // The corners satisfy q(corner) = 1: on the boundary, never outside.
    let er = EllipseRegion(e);
    for (x, y) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let xi = Interval::from_int(x, PREC);
        let yi = Interval::from_int(y, PREC);
        assert!(er.membership(&xi, &yi).candidate());
    }

    // Disk: the enclosing ellipse is the concentric circle of radius √2·r,
    // exactly twice the disk's area; boundary points sit strictly inside.
    let disk = Disk::new(d(1), d(-2), dy(3, 1));
    let e = enclosing_ellipse(&disk, PREC);
    let ratio = e.area().to_f64() / disk.area(PREC).to_f64();
    assert!((ratio - 2.0).abs() < 1e-9);
    let er = EllipseRegion(e);
    for i in 0..32 {
        let th = f64::from(i) * std::f64::consts::TAU / 32.0;
        let x = Interval::from_f64(1.0 + 1.5 * th.cos(), PREC);
        let y = Interval::from_f64(-2.0 + 1.5 * th.sin(), PREC);
        assert_eq!(er.membership(&x, &y), Membership::Inside);
    }
}

#[test]
fn enclosing_ellipse_contains_random_triangles() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut made = 0;
    while made < 25 {
        let v: Vec<(i64, i64)> = (0..3)
            .map(|_| (rng.random_range(-24..=24), rng.random_range(-24..=24)))
            .collect();
        let cross =
            (v[1].0 - v[0].0) * (v[2].1 - v[0].1) - (v[1].1 - v[0].1) * (v[2].0 - v[0].0);
        if cross == 0 {
            continue; // degenerate draw
        }
        made += 1;
        let tri =
            ConvexPolygon::new(v.iter().map(|&(x, y)| (dy(x, 3), dy(y, 3))).collect());
        let e = enclosing_ellipse(&tri, PREC);
        let er = EllipseRegion(e.clone());
        // Vertices and edge midpoints never fall outside.
        for i in 0..3 {
            let (px, py) = &tri.vertices()[i];
            let (qx, qy) = &tri.vertices()[(i + 1) % 3];
            for (x, y) in [
                (px.clone(), py.clone()),
                (half(&(px + qx)), half(&(py + qy))),
            ] {
                let xi = Interval::from_dyadic(&x, PREC);
                let yi = Interval::from_dyadic(&y, PREC);
                assert!(er.membership(&xi, &yi).candidate(), "escaped the ellipse");
            }
        }
        // Area bound π/2 relative to the bounding box.
        let bound = std::f64::consts::FRAC_PI_2 * tri.bbox().area_exact().to_f64();
        assert!(e.area().to_f64() <= bound * (1.0 + 1e-9));
    }
}

#[test]
fn ellipse_transformation_law() {
    // For the image E' = G(E) the matrix is G⁻ᵀ·M·G⁻¹, equivalently
    // q_{E'}(G·u) = q_E(u) on center offsets — checked numerically — and
    // certified membership commutes with the exact point action.
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    // Two pools, each closed under products: operators preserving Z[ω]
    // and integer shear words preserving Z². (Mixing the pools can leave
    // both lattices, which the constructor rightly rejects.)
    let omega_gens = [
        GridOperator::op_r(),
        GridOperator::op_k(),
        GridOperator::op_a_pow(1),
        GridOperator::op_b_pow(-1),
        GridOperator::op_x(),
        GridOperator::op_z(),
    ];
    let zi_gens = [
        GridOperator::shear_x(1),
        GridOperator::shear_x(-2),
        GridOperator::shear_y(-1),
        GridOperator::shear_y(3),
        GridOperator::op_x(),
        GridOperator::op_z(),
    ];
    for _ in 0..40 {
        let p: f64 = rng.random_range(-1.0..1.0f64).exp();
        let r: f64 = rng.random_range(-1.0..1.0f64).exp();
        let t: f64 = rng.random_range(-0.9..0.9);
        let q = t * (p * r).sqrt();
        let cx: f64 = rng.random_range(-2.0..2.0);
        let cy: f64 = rng.random_range(-2.0..2.0);
        let e = Ellipse::from_f64(PREC, [p, q, r], (cx, cy));

        let gens: &[GridOperator] = if rng.random::<bool>() { &omega_gens } else { &zi_gens };
        let mut g = GridOperator::identity();
        for _ in 0..4 {
            g = g.mul(&gens[rng.random_range(0..gens.len())]);
        }
        assert!(g.is_special());
        let e2 = e.transformed(&g);

        let m = g.to_f64_matrix();
        let (d11, d12, d22) = (e.d11().to_f64(), e.d12().to_f64(), e.d22().to_f64());
        let (f11, f12, f22) = (e2.d11().to_f64(), e2.d12().to_f64(), e2.d22().to_f64());
        for _ in 0..8 {
            let ux: f64 = rng.random_range(-3.0..3.0);
            let uy: f64 = rng.random_range(-3.0..3.0);
            let qe = d11 * ux * ux + 2.0 * d12 * ux * uy + d22 * uy * uy;
            let vx = m[0] * ux + m[1] * uy;
            let vy = m[2] * ux + m[3] * uy;
            let qe2 = f11 * vx * vx + 2.0 * f12 * vx * vy + f22 * vy * vy;
            let scale =
                1.0 + qe.abs() + (f11.abs() + 2.0 * f12.abs() + f22.abs()) * (vx * vx + vy * vy);
            assert!((qe - qe2).abs() <= 1e-7 * scale, "{qe} vs {qe2}");
        }

        // Exact membership equivalence under the point action; random
        // points practically never land on the boundary, so almost every
        // verdict is decisive and must agree.
        let er = EllipseRegion(e.clone());
        let er2 = EllipseRegion(e2);
        let mut decisive = 0;
        for _ in 0..12 {
            let px = DyadicRoot2::new(rng.random_range(-32i64..=32), 0, 3);
            let py = DyadicRoot2::new(rng.random_range(-32i64..=32), 0, 3);
            let (qx, qy) = g.apply_point(&px, &py);
            let before = er.membership(&px.to_interval(PREC), &py.to_interval(PREC));
            let after = er2.membership(&qx.to_interval(PREC), &qy.to_interval(PREC));
            match (before, after) {
                (Membership::Inside, Membership::Outside)
                | (Membership::Outside, Membership::Inside) => {
                    panic!("transform changed certified membership")
                }
                (Membership::Inside, Membership::Inside)
                | (Membership::Outside, Membership::Outside) => decisive += 1,
                _ => {}
            }
        }
        assert!(decisive >= 10, "too many undecided points: {decisive}/12");
    }
}
