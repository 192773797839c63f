//! Exhaustive agreement between the norm-equation solvers and brute-force
//! enumeration on small inputs, plus end-to-end determinism.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use number_theory::{
    factor_bounded, solve_norm_zi, solve_norm_zomega, RandomSource, DEFAULT_EFFORT,
};
use ring_core::{ZOmega, ZRoot2};

#[test]
fn zi_existence_matches_two_squares_brute_force() {
    const LIMIT: usize = 10_000;
    let mut is_sum = vec![false; LIMIT + 1];
    for a in 0..=100usize {
        for b in a..=100 {
            let s = a * a + b * b;
            if s <= LIMIT {
                is_sum[s] = true;
            }
        }
    }
    let mut rng = RandomSource::new(0);
    for m in 1..=LIMIT {
        let mb = BigInt::from(m);
        let fact = factor_bounded(&mb, DEFAULT_EFFORT, &mut rng);
        match solve_norm_zi(&mb, &fact).unwrap() {
            Some(alpha) => {
                assert_eq!(alpha.norm(), mb, "bad witness at {m}");
                assert!(is_sum[m], "phantom witness at {m}");
            }
            None => assert!(!is_sum[m], "missed witness at {m}"),
        }
    }
}

#[test]
fn zomega_existence_matches_brute_force() {
    // Everything t†t can reach with ξ = a+b√2, |a|, |b| ≤ 20: the real
    // embedding of ξ is at most 20+20√2 < 49, so |cᵢ| ≤ √49 + 2 = 9 safely
    // covers every contributing witness.
    const XI_BOUND: i64 = 20;
    const C_BOUND: i64 = 9;
    let mut achievable = HashSet::new();
    for c0 in -C_BOUND..=C_BOUND {
        for c1 in -C_BOUND..=C_BOUND {
            for c2 in -C_BOUND..=C_BOUND {
                for c3 in -C_BOUND..=C_BOUND {
                    let m = ZOmega::new(c0, c1, c2, c3).mag_sq();
                    if let (Some(a), Some(b)) = (m.a.to_i64(), m.b.to_i64()) {
                        if a.abs() <= XI_BOUND && b.abs() <= XI_BOUND {
                            achievable.insert((a, b));
                        }
                    }
                }
            }
        }
    }

    let mut rng = RandomSource::new(1);
    for a in -XI_BOUND..=XI_BOUND {
        for b in -XI_BOUND..=XI_BOUND {
            let xi = ZRoot2::new(a, b);
            // the factorization is only consulted once the positivity screen
            // passes, in which case the norm is positive
            let fact = factor_bounded(&xi.norm().max(BigInt::one()), DEFAULT_EFFORT, &mut rng);
            match solve_norm_zomega(&xi, &fact).unwrap() {
                Some(t) => {
                    assert_eq!(t.mag_sq(), xi, "bad witness at ({a},{b})");
                    assert!(achievable.contains(&(a, b)), "phantom witness at ({a},{b})");
                }
                None => {
                    assert!(!achievable.contains(&(a, b)), "missed witness at ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn same_seed_reproduces_identical_witnesses() {
    let zi_run = |seed: u64| {
        let m = BigInt::from(2u64 * 5 * 5 * 13 * 65537);
        let mut rng = RandomSource::new(seed);
        let fact = factor_bounded(&m, DEFAULT_EFFORT, &mut rng);
        let alpha = solve_norm_zi(&m, &fact).unwrap().expect("solvable by construction");
        assert_eq!(alpha.norm(), m);
        alpha
    };
    assert_eq!(zi_run(9), zi_run(9));

    let zomega_run = |seed: u64| {
        // ξ = t†t for t = 5+3ω+ω²−2ω³, so a witness certainly exists
        let xi = ZRoot2::new(39, 26);
        let mut rng = RandomSource::new(seed);
        let fact = factor_bounded(&xi.norm(), DEFAULT_EFFORT, &mut rng);
        let t = solve_norm_zomega(&xi, &fact).unwrap().expect("solvable by construction");
        assert_eq!(t.mag_sq(), xi);
        t
    };
    assert_eq!(zomega_run(3), zomega_run(3));
}
