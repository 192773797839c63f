//! Randomized stress of the skew-reduction machinery: the single-ellipse
//! shear reduction over Z[i], the measured step contraction over random
//! states, and the terminal uprightness bound of the pair reduction.

use grid_geometry::{
    step, to_upright_pair, to_upright_zi, Ellipse, EllipsePairState, DEFAULT_STEP_CONSTANTS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{GaussInt, ZOmega};

const PREC: u32 = 96;

/// Symmetric positive definite matrix `R(θ)ᵀ·diag(μ, 1/μ)·R(θ)` — unit
/// determinant, uprightness ≈ π/(4μ|sinθ·cosθ|) for generic angles.
fn rotated_spd(mu: f64, theta: f64) -> [f64; 3] {
    let (s, c) = theta.sin_cos();
    [
        mu * c * c + s * s / mu,
        (mu - 1.0 / mu) * s * c,
        mu * s * s + c * c / mu,
    ]
}

#[test]
fn upright_zi_reaches_half_from_extreme_ellipses() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..20 {
        let theta: f64 = rng.random_range(0.3..1.2);
        let target_up: f64 = 10f64.powf(rng.random_range(-6.0..-2.0));
        let mu =
            std::f64::consts::FRAC_PI_4 / (target_up * (theta.sin() * theta.cos()).abs());
        let c = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let e = Ellipse::from_f64(PREC, rotated_spd(mu, theta), c);
        let before = e.uprightness().to_f64();
        assert!(before < 1e-2, "generator should produce a squashed ellipse");

        let g = to_upright_zi(&e);
        assert!(g.preserves_zi() && g.is_special(), "case {i}");
        let after = e.transformed(&g).uprightness().to_f64();
        assert!(after >= 0.5, "case {i}: uprightness {after} from {before}");

        // G and G⁻¹ both act on the Z[i] lattice (integer shears), so the
        // point action round-trips.
        let ginv = g.inverse();
        assert!(ginv.preserves_zi());
        for _ in 0..8 {
            let u = GaussInt::new(rng.random_range(-9i64..=9), rng.random_range(-9i64..=9));
            let v = g.apply_gauss(&u).expect("lattice image");
            assert_eq!(ginv.apply_gauss(&v).unwrap(), u);
        }
    }

    // An already 1/2-upright ellipse needs no work at all.
    let e = Ellipse::from_f64(PREC, [1.0, 0.0, 1.0], (0.25, -0.75));
    assert!(to_upright_zi(&e).is_identity());
}

#[test]
fn step_contracts_ten_thousand_random_states() {
    let c = DEFAULT_STEP_CONSTANTS;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..10_000 {
        // Log-uniform skew in [P, 10^8], split randomly between the two
        // ellipses, with independent positions and random signs.
        let skew = 10f64.powf(rng.random_range(c.p.log10()..8.0));
        let t: f64 = rng.random_range(0.0..1.0);
        let sign = |rng: &mut ChaCha8Rng| if rng.random::<bool>() { 1.0 } else { -1.0 };
        let b = skew.sqrt() * t.sqrt() * sign(&mut rng);
        let beta = skew.sqrt() * (1.0 - t).sqrt() * sign(&mut rng);
        let z: f64 = rng.random_range(-8.0..8.0);
        let zeta: f64 = rng.random_range(-8.0..8.0);
        let mut state = EllipsePairState {
            b,
            e: (1.0 + b * b).sqrt(),
            z,
            beta,
            eps: (1.0 + beta * beta).sqrt(),
            zeta,
        };

        let before = state.skew();
        let g = step(&state, &c).expect("skew is above the threshold");
        assert!(g.is_special() && g.preserves_zomega(), "case {i}");
        state.apply(&g);
        assert!(
            state.skew() <= c.q * before * (1.0 + 1e-6),
            "case {i}: skew {before} -> {} exceeds Q = {}",
            state.skew(),
            c.q
        );
    }
}

#[test]
fn shift_moves_bias_and_preserves_skew() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let b: f64 = rng.random_range(-40.0..40.0);
        let beta: f64 = rng.random_range(-40.0..40.0);
        let s = EllipsePairState {
            b,
            e: (1.0 + b * b).sqrt(),
            z: rng.random_range(-6.0..6.0),
            beta,
            eps: (1.0 + beta * beta).sqrt(),
            zeta: rng.random_range(-6.0..6.0),
        };
        let k: i64 = rng.random_range(-5..=5);
        let t = s.shifted(k);
        assert!((t.skew() - s.skew()).abs() <= 1e-9 * (1.0 + s.skew()));
        assert!((t.bias() - (s.bias() + 2.0 * k as f64)).abs() <= 1e-9);
    }
}

#[test]
fn upright_pair_bound_and_bullet_compatibility() {
    let c = DEFAULT_STEP_CONSTANTS;
    // Terminal skew ≤ P caps each b-parameter, so each uprightness is at
    // least π/(4√(P+1)) — exactly π/16 at P = 15.
    let bound = std::f64::consts::PI / (4.0 * (c.p + 1.0).sqrt());
    assert!((bound - std::f64::consts::PI / 16.0).abs() < 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut spd = |rng: &mut ChaCha8Rng| {
        let scale: f64 = rng.random_range(-1.0..1.0f64).exp();
        let p: f64 = scale * rng.random_range(-1.0..1.0f64).exp();
        let r: f64 = scale * rng.random_range(-1.0..1.0f64).exp();
        let t: f64 = rng.random_range(-0.9999..0.9999);
        [p, t * (p * r).sqrt(), r]
    };
    for i in 0..10 {
        let ea = Ellipse::from_f64(PREC, spd(&mut rng), (0.0, 0.0));
        let eb = Ellipse::from_f64(PREC, spd(&mut rng), (0.0, 0.0));
        let g = to_upright_pair(&ea, &eb, &c);
        assert!(g.preserves_zomega() && g.is_special());

        let up_a = ea.transformed(&g).uprightness().to_f64();
        let up_b = eb.transformed(&g.bullet()).uprightness().to_f64();
        assert!(up_a >= bound * (1.0 - 1e-9), "case {i}: up_a = {up_a}");
        assert!(up_b >= bound * (1.0 - 1e-9), "case {i}: up_b = {up_b}");

        // (G·u)• = G•·u• on ring points: the two sides of the pair move by
        // conjugate operators.
        for _ in 0..6 {
            let u = ZOmega::new(
                rng.random_range(-5i64..=5),
                rng.random_range(-5i64..=5),
                rng.random_range(-5i64..=5),
                rng.random_range(-5i64..=5),
            );
            let lhs = g.apply_zomega(&u).unwrap().bullet();
            let rhs = g.bullet().apply_zomega(&u.bullet()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    // A pair that is already below the skew threshold is left untouched.
    let circle = Ellipse::from_f64(PREC, [1.0, 0.0, 1.0], (0.0, 0.0));
    assert!(to_upright_pair(&circle, &circle, &c).is_identity());
}
