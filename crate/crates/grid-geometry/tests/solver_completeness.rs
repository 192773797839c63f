//! Brute-force completeness, density and growth laws, deterministic
//! ordering, and grid-operator equivariance of the scaled enumerators.

use std::collections::{BTreeMap, HashSet};

use grid_geometry::{
    Box2, ConvexPolygon, ConvexRegion, Disk, GridOperator, GridSolution, ScaledGridZi,
    ScaledGridZomega, TransformedRegion,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{Dyadic, GaussInt, Interval, ZOmega};

const PREC: u32 = 96;

fn d(n: i64) -> Dyadic {
    Dyadic::from_int(n)
}

fn dy(m: i64, e: u32) -> Dyadic {
    Dyadic::new(m, e)
}

// ---------------------------------------------------------------------
// Z[i]
// ---------------------------------------------------------------------

/// `√(2^k·5^ℓ)` as a certified interval.
fn scale_zi(k: u8, l: u32, prec: u32) -> Interval {
    let s2 = BigInt::from(2).pow(u32::from(k)) * BigInt::from(5).pow(l);
    Interval::from_bigint(&s2, prec).sqrt()
}

/// Brute-force solutions of the scaled Z[i] problem at one scale: scan the
/// integer box around `s·BBox(A)` with the region's own certified
/// membership. The oracle shares the membership test but none of the
/// enumeration geometry (uprighting, column slicing).
fn brute_zi<R: ConvexRegion>(region: &R, k: u8, l: u32) -> Vec<(BigInt, BigInt)> {
    let s = scale_zi(k, l, PREC);
    let sf = (2f64.powi(i32::from(k)) * 5f64.powi(l as i32)).sqrt();
    let b = region.bbox();
    let xr = (sf * b.x0.to_f64()).floor() as i64 - 2..=(sf * b.x1.to_f64()).ceil() as i64 + 2;
    let yr = (sf * b.y0.to_f64()).floor() as i64 - 2..=(sf * b.y1.to_f64()).ceil() as i64 + 2;
    let mut out = Vec::new();
    for x in xr {
        for y in yr.clone() {
            let xi = &Interval::from_int(x, PREC) / &s;
            let yi = &Interval::from_int(y, PREC) / &s;
            if region.membership(&xi, &yi).candidate() {
                out.push((BigInt::from(x), BigInt::from(y)));
            }
        }
    }
    out.sort();
    out
}

/// Consumes solver output grouped per `(ℓ, k)` block, up to `ℓ = max_l`
/// and, within the last `ℓ`, `k ≤ max_k_at_last`.
fn zi_blocks<R: ConvexRegion>(
    solver: &mut ScaledGridZi<R>,
    max_l: u32,
    max_k_at_last: u8,
) -> BTreeMap<(u32, u8), Vec<(BigInt, BigInt)>> {
    let mut blocks: BTreeMap<(u32, u8), Vec<(BigInt, BigInt)>> = BTreeMap::new();
    for (k, l, p) in solver.by_ref() {
        if l > max_l || (l == max_l && k > max_k_at_last) {
            break;
        }
        blocks.entry((l, k)).or_default().push((p.re, p.im));
    }
    blocks
}

fn check_zi<R: ConvexRegion + Clone>(region: &R, label: &str) {
    let mut solver = ScaledGridZi::new(region.clone(), PREC);
    let blocks = zi_blocks(&mut solver, 1, 2);
    let mut seen = HashSet::new();
    for l in 0..=1u32 {
        for k in 0..=2u8 {
            let got = blocks.get(&(l, k)).cloned().unwrap_or_default();
            for p in &got {
                assert!(seen.insert((k, l, p.clone())), "{label}: duplicate at k={k} l={l}");
            }
            assert_eq!(got, brute_zi(region, k, l), "{label}: block k={k} l={l}");
        }
    }
}

#[test]
fn zi_disk_blocks_match_brute_force() {
    let disk = Disk::new(d(0), d(0), dy(3, 1)); // radius 3/2 about the origin
    let mut solver = ScaledGridZi::new(disk.clone(), PREC);
    let blocks = zi_blocks(&mut solver, 1, 2);
    // Base block: the nine Gaussian integers of norm ≤ 9/4, i.e.
    // {0, ±1, ±i, ±1±i}, emitted in lexicographic (re, im) order.
    assert_eq!(blocks[&(0, 0)].len(), 9);
    for l in 0..=1u32 {
        for k in 0..=2u8 {
            let got = blocks.get(&(l, k)).cloned().unwrap_or_default();
            assert_eq!(got, brute_zi(&disk, k, l), "disk block k={k} l={l}");
        }
    }
}

#[test]
fn zi_random_regions_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for case in 0..3 {
        let cx = dy(rng.random_range(-12..=12), 3);
        let cy = dy(rng.random_range(-12..=12), 3);
        let r = dy(rng.random_range(6..=20), 3);
        check_zi(&Disk::new(cx, cy, r), &format!("disk {case}"));
    }
    let mut made = 0;
    while made < 3 {
        let v: Vec<(i64, i64)> = (0..3)
            .map(|_| (rng.random_range(-10..=10), rng.random_range(-10..=10)))
            .collect();
        let cross =
            (v[1].0 - v[0].0) * (v[2].1 - v[0].1) - (v[1].1 - v[0].1) * (v[2].0 - v[0].0);
        if cross == 0 {
            continue;
        }
        let tri =
            ConvexPolygon::new(v.iter().map(|&(x, y)| (dy(x, 2), dy(y, 2))).collect());
        check_zi(&tri, &format!("triangle {made}"));
        made += 1;
    }
}

#[test]
fn zi_density_and_growth() {
    // A disk of radius 1 already holds ≥ 3 grid points at the base scale.
    let unit = Disk::new(d(0), d(0), d(1));
    let mut solver = ScaledGridZi::new(unit, PREC);
    let blocks = zi_blocks(&mut solver, 0, 0);
    assert!(blocks[&(0, 0)].len() >= 3);

    // Two distinct solutions at ℓ guarantee ≥ 5^j + 1 at ℓ + 2j.
    let disk = Disk::new(d(0), d(0), dy(3, 1));
    let mut solver = ScaledGridZi::new(disk, PREC);
    let blocks = zi_blocks(&mut solver, 4, 0);
    assert!(blocks[&(0, 0)].len() >= 2);
    assert!(blocks[&(2, 0)].len() >= 5 + 1, "5+1 solutions at ℓ = 2");
    assert!(blocks[&(4, 0)].len() >= 25 + 1, "25+1 solutions at ℓ = 4");
}

// ---------------------------------------------------------------------
// Z[ω]
// ---------------------------------------------------------------------

/// `√2^k` as a certified interval.
fn scale_zomega(k: u32, prec: u32) -> Interval {
    let base = Interval::from_bigint(&(BigInt::from(1) << (k / 2)), prec);
    if k % 2 == 1 {
        &base * &Interval::sqrt2(prec)
    } else {
        base
    }
}

/// Certified membership of `u` in the scaled pair problem:
/// `u ∈ √2^k·A` and `u• ∈ (−√2)^k·B`.
fn zomega_member<RA: ConvexRegion, RB: ConvexRegion>(
    u: &ZOmega,
    a: &RA,
    b: &RB,
    k: u32,
) -> bool {
    let s = scale_zomega(k, PREC);
    let (ux, uy) = u.to_interval_complex(PREC);
    if !a.membership(&(&ux / &s), &(&uy / &s)).candidate() {
        return false;
    }
    let (mut wx, mut wy) = u.bullet().to_interval_complex(PREC);
    if k % 2 == 1 {
        wx = -&wx;
        wy = -&wy;
    }
    b.membership(&(&wx / &s), &(&wy / &s)).candidate()
}

/// Brute force over the coefficient cube `|c_j| ≤ bound`; complete as long
/// as `bound > (|u| + |u•|)/2` for every possible solution.
fn brute_zomega<RA: ConvexRegion, RB: ConvexRegion>(
    a: &RA,
    b: &RB,
    k: u32,
    bound: i64,
) -> Vec<ZOmega> {
    let mut out = Vec::new();
    for c0 in -bound..=bound {
        for c1 in -bound..=bound {
            for c2 in -bound..=bound {
                for c3 in -bound..=bound {
                    let u = ZOmega::new(c0, c1, c2, c3);
                    if zomega_member(&u, a, b, k) {
                        out.push(u);
                    }
                }
            }
        }
    }
    out.sort_by(|u, v| u.c.cmp(&v.c));
    out
}

fn zomega_blocks<RA: ConvexRegion, RB: ConvexRegion>(
    solver: &mut ScaledGridZomega<RA, RB>,
    max_k: u32,
) -> BTreeMap<u32, Vec<ZOmega>> {
    let mut blocks: BTreeMap<u32, Vec<ZOmega>> = BTreeMap::new();
    for (k, u) in solver.by_ref() {
        if k > max_k {
            break;
        }
        blocks.entry(k).or_default().push(u);
    }
    blocks
}

#[test]
fn zomega_blocks_match_coefficient_brute_force() {
    // A small disk against the unit square. Any solution obeys
    // |c_j| ≤ (|u| + |u•|)/2 ≤ ((3/4)·√2^k + √2·√2^k)/2 < 3 for k ≤ 2,
    // so a short coefficient scan is a complete oracle.
    let a = Disk::new(d(0), d(0), dy(3, 2)); // radius 3/4
    let b = Box2::from_ints(-1, 1, -1, 1);
    let mut solver = ScaledGridZomega::new(a.clone(), b.clone(), PREC);
    let blocks = zomega_blocks(&mut solver, 2);
    for k in 0..=2u32 {
        let got = blocks.get(&k).cloned().unwrap_or_default();
        assert_eq!(got, brute_zomega(&a, &b, k, 3), "block k={k}");
    }
    assert!(blocks[&0].contains(&ZOmega::zero()));
}

#[test]
fn zomega_density_and_growth() {
    // Disks of radius 5/2 on both sides: r·R = 6.25 ≥ (1+√2)² ≈ 5.83 gives
    // ≥ 2 solutions at k = 0, and then ≥ 2^ℓ + 1 at k = 2ℓ.
    let a = Disk::new(d(0), d(0), dy(5, 1));
    let b = Disk::new(d(0), d(0), dy(5, 1));
    let mut solver = ScaledGridZomega::new(a, b, PREC);
    let blocks = zomega_blocks(&mut solver, 4);
    assert!(blocks[&0].len() >= 2);
    assert!(blocks[&2].len() >= 2 + 1, "2+1 solutions at k = 2");
    assert!(blocks[&4].len() >= 4 + 1, "4+1 solutions at k = 4");

    let mut seen = HashSet::new();
    for (k, us) in &blocks {
        for u in us {
            assert!(seen.insert((*k, u.c.clone())), "duplicate at k={k}");
        }
    }
}

#[test]
fn zomega_equivariance_under_grid_operators() {
    // u solves (A, B) iff G·u solves (G(A), G•(B)): transforming the
    // problem and mapping the solutions commute, block by block.
    let a = Disk::new(dy(2, 3), dy(1, 3), dy(29, 5)); // radius 29/32 near 0
    let b = Box2::from_ints(-1, 1, -1, 1);
    let g = GridOperator::op_k();
    assert!(g.preserves_zomega() && g.is_special());

    let mut base = ScaledGridZomega::new(a.clone(), b.clone(), PREC);
    let base_blocks = zomega_blocks(&mut base, 2);

    let ta = TransformedRegion::new(a, g.clone());
    let tb = TransformedRegion::new(b, g.bullet());
    let mut moved = ScaledGridZomega::new(ta, tb, PREC);
    let moved_blocks = zomega_blocks(&mut moved, 2);

    for k in 0..=2u32 {
        let mut mapped: Vec<ZOmega> = base_blocks
            .get(&k)
            .cloned()
            .unwrap_or_default()
            .iter()
            .map(|u| g.apply_zomega(u).unwrap())
            .collect();
        mapped.sort_by(|u, v| u.c.cmp(&v.c));
        let got = moved_blocks.get(&k).cloned().unwrap_or_default();
        assert_eq!(got, mapped, "equivariance at k={k}");
    }
}

#[test]
fn solution_dump_lines() {
    let zi: GridSolution = (1u8, 2u32, GaussInt::new(-3, 4)).into();
    assert_eq!(zi.dump_line(), "1 2 -3 4");
    let zo: GridSolution = (3u32, ZOmega::new(1, 0, -2, 5)).into();
    assert_eq!(zo.dump_line(), "3 1 0 -2 5");
}
