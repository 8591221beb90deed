//! Brute-force ground truth for the closed forms: maximizes the ET size by
//! direct containment search, with no knowledge of the case analysis.
//!
//! The per-side search slides the ET base `[t, t + s]` along the side. For
//! a fixed left endpoint `t`, feasibility is monotone in `s` (the triangle
//! is convex), so the largest feasible `s` comes from bisection; the best
//! `t` comes from a coarse grid followed by golden-section refinement. The
//! placement mode is inferred afterward from which constraints are active,
//! never assumed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{ETMetrics, Point, SideLabel, TriangleSpec, SQRT3};
use crate::solver::{PlacementMode, SideETResult};

/// Search resolution and tolerances for the oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Coarse grid points per search parameter.
    pub grid: usize,
    /// Iterations of bracketed 1-D (golden-section) refinement.
    pub refine_iters: usize,
    /// Containment tolerance, relative to the triangle scale.
    pub containment_tol: f64,
    /// Seed for the randomized triangle suites.
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid: 2048,
            refine_iters: 80,
            containment_tol: 1e-12,
            seed: 7,
        }
    }
}

impl OracleConfig {
    fn validated(&self) -> OracleConfig {
        OracleConfig {
            grid: self.grid.max(16),
            refine_iters: self.refine_iters.max(10),
            ..*self
        }
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Largest feasible ET size with base starting at offset `t` along the side.
fn max_size_at(
    tri: &TriangleSpec,
    p: Point,
    dir: Point,
    interior: Point,
    len: f64,
    t: f64,
    tol: f64,
) -> f64 {
    let feasible = |s: f64| -> bool {
        let b1 = p + dir * t;
        let b2 = p + dir * (t + s);
        let apex = p + dir * (t + s / 2.0) + interior * (s * SQRT3 / 2.0);
        tri.contains(b1, tol) && tri.contains(b2, tol) && tri.contains(apex, tol)
    };
    let mut hi = len - t;
    if hi <= 0.0 {
        return 0.0;
    }
    if feasible(hi) {
        return hi;
    }
    let mut lo = 0.0;
    // resolve s to ~1e-15 of the side length
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Brute-force largest ET with base on the given side.
///
/// Wedged placements are always admitted here; callers compare against the
/// closed form with `allow_wedged = true`.
pub fn oracle_largest_et_on_side(
    tri: &TriangleSpec,
    side: SideLabel,
    cfg: &OracleConfig,
) -> SideETResult {
    let cfg = cfg.validated();
    let (p, q) = tri.side_endpoints(side);
    let opposite = tri.opposite_vertex(side);
    let len = tri.side_length(side);
    let dir = (q - p).normalized();
    let interior = dir.perp();
    let tol = cfg.containment_tol * tri.longest_side();

    let smax = |t: f64| max_size_at(tri, p, dir, interior, len, t, tol);

    let mut best_t = 0.0;
    let mut best_s = 0.0;
    let grid = cfg.grid;
    for i in 0..grid {
        let t = len * i as f64 / (grid - 1) as f64;
        let s = smax(t);
        if s > best_s {
            best_s = s;
            best_t = t;
        }
    }

    // golden-section refinement of t around the best coarse cell
    let step = len / (grid - 1) as f64;
    let mut a = (best_t - step).max(0.0);
    let mut b = (best_t + step).min(len);
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = smax(x1);
    let mut f2 = smax(x2);
    for _ in 0..cfg.refine_iters {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = smax(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = smax(x2);
        }
    }
    for (t, s) in [(x1, f1), (x2, f2)] {
        if s > best_s {
            best_s = s;
            best_t = t;
        }
    }

    assert!(
        best_s > 0.0,
        "no feasible placement on side {side} of a positive-area triangle"
    );

    let b1 = p + dir * best_t;
    let b2 = p + dir * (best_t + best_s);
    let apex = p + dir * (best_t + best_s / 2.0) + interior * (best_s * SQRT3 / 2.0);

    // infer the placement mode from the active constraints
    let pos_tol = 1e-9 * len;
    let apex_at_vertex = apex.distance(opposite) <= pos_tol;
    let spans = best_t <= pos_tol && (len - best_t - best_s) <= pos_tol;
    let touches = best_t <= pos_tol || (len - best_t - best_s) <= pos_tol;
    let apex_on_boundary = tri.boundary_distance(apex) <= pos_tol;
    let mode = if spans && apex_at_vertex {
        PlacementMode::WholeTriangle
    } else if apex_at_vertex && !touches {
        PlacementMode::ApexAtOppositeVertex
    } else if spans && !apex_on_boundary {
        PlacementMode::Wedged
    } else {
        PlacementMode::SharedVertex
    };

    let metrics = ETMetrics::for_side(best_s);
    SideETResult {
        side,
        mode,
        ratio: Some(metrics.area / tri.area()),
        metrics: Some(metrics),
        vertices: Some([b1, b2, apex]),
        inscribed: !matches!(mode, PlacementMode::Wedged | PlacementMode::None),
    }
}

/// Best ET found by the free-orientation search.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalETResult {
    pub metrics: ETMetrics,
    pub vertices: [Point; 3],
}

/// Two-parameter global search: anchor vertex on the boundary × rotation,
/// with the maximal contained scale per cell found by bisection.
///
/// Any contained ET can be translated until a vertex meets the boundary, so
/// anchored placements cover the global optimum at grid resolution. Used to
/// spot-check that a free orientation never beats the best base-on-side ET.
pub fn oracle_global_inscribed_et(tri: &TriangleSpec, cfg: &OracleConfig) -> GlobalETResult {
    let cfg = cfg.validated();
    let verts = tri.vertices();
    let sides = [
        (verts[0], verts[1]),
        (verts[1], verts[2]),
        (verts[2], verts[0]),
    ];
    let side_lens: Vec<f64> = sides.iter().map(|(u, v)| u.distance(*v)).collect();
    let perimeter: f64 = side_lens.iter().sum();
    let tol = cfg.containment_tol * tri.longest_side();
    let s_cap = tri.longest_side();

    let boundary_point = |u: f64| -> Point {
        let mut d = u.rem_euclid(perimeter);
        for (k, (a, b)) in sides.iter().enumerate() {
            if d <= side_lens[k] {
                return *a + (*b - *a) * (d / side_lens[k]);
            }
            d -= side_lens[k];
        }
        sides[2].1
    };

    let max_scale = |u: f64, phi_deg: f64| -> f64 {
        let anchor = boundary_point(u);
        let d1 = Point::new(cos_d(phi_deg), sin_d(phi_deg));
        let d2 = Point::new(cos_d(phi_deg + 60.0), sin_d(phi_deg + 60.0));
        let feasible = |s: f64| -> bool {
            tri.contains(anchor + d1 * s, tol) && tri.contains(anchor + d2 * s, tol)
        };
        let mut lo = 0.0;
        let mut hi = s_cap;
        if feasible(hi) {
            return hi;
        }
        for _ in 0..50 {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    // coarse grid: about cfg.grid cells split over the two parameters
    let n = ((cfg.grid as f64).sqrt().ceil() as usize).max(16);
    let mut best = (0.0f64, 0.0f64, 0.0f64); // (s, u, phi)
    for iu in 0..n {
        let u = perimeter * iu as f64 / n as f64;
        for iphi in 0..n {
            // the ET repeats every 120 degrees of rotation
            let phi = 120.0 * iphi as f64 / n as f64;
            let s = max_scale(u, phi);
            if s > best.0 {
                best = (s, u, phi);
            }
        }
    }

    // alternating golden-section refinement on u and phi
    let (mut s_best, mut u_best, mut phi_best) = best;
    let mut du = perimeter / n as f64;
    let mut dphi = 120.0 / n as f64;
    for _ in 0..6 {
        let (s, u) = golden_max(
            |u| max_scale(u, phi_best),
            u_best - du,
            u_best + du,
            cfg.refine_iters,
        );
        if s > s_best {
            s_best = s;
            u_best = u;
        }
        let (s, phi) = golden_max(
            |phi| max_scale(u_best, phi),
            phi_best - dphi,
            phi_best + dphi,
            cfg.refine_iters,
        );
        if s > s_best {
            s_best = s;
            phi_best = phi;
        }
        du /= 4.0;
        dphi /= 4.0;
    }

    let anchor = boundary_point(u_best);
    let v1 = anchor + Point::new(cos_d(phi_best), sin_d(phi_best)) * s_best;
    let v2 = anchor + Point::new(cos_d(phi_best + 60.0), sin_d(phi_best + 60.0)) * s_best;
    GlobalETResult {
        metrics: ETMetrics::for_side(s_best),
        vertices: [anchor, v1, v2],
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (f1, x1)
    } else {
        (f2, x2)
    }
}

fn sin_d(d: f64) -> f64 {
    d.to_radians().sin()
}

fn cos_d(d: f64) -> f64 {
    d.to_radians().cos()
}

/// Deterministic scalene test triangles: angles uniform over the simplex
/// with every angle at least 5° and pairwise gaps of at least 0.5°, scaled
/// to circumdiameter 1.
pub fn sample_scalene_triangles(n: usize, seed: u64) -> Vec<TriangleSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (u, v): (f64, f64) = (rng.gen(), rng.gen());
        let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
        let mut angs = [180.0 * u, 180.0 * v, 180.0 * (1.0 - u - v)];
        angs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let [al, be, ga] = angs;
        if ga < 5.0 || al - be < 0.5 || be - ga < 0.5 {
            continue;
        }
        let tri = TriangleSpec::from_angle_values(al, be, ga, SideLabel::A, sin_d(al))
            .expect("sampled angles are valid");
        out.push(tri);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::largest_et_on_side;

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs())
    }

    fn quick_cfg() -> OracleConfig {
        OracleConfig {
            grid: 512,
            refine_iters: 60,
            ..OracleConfig::default()
        }
    }

    #[test]
    fn oracle_matches_puzzle3_side() {
        let tri = TriangleSpec::from_angle_values(45.0, 75.0, 60.0, SideLabel::A, 2.0).unwrap();
        let r = oracle_largest_et_on_side(&tri, SideLabel::C, &quick_cfg());
        let expected = 6.0f64.sqrt() * sin_d(45.0) / sin_d(75.0);
        assert!(rel_err(r.metrics.unwrap().side, expected) < 1e-6);
        assert_eq!(r.mode, PlacementMode::SharedVertex);
    }

    #[test]
    fn oracle_equilateral_whole_triangle() {
        let tri = TriangleSpec::from_angle_values(60.0, 60.0, 60.0, SideLabel::A, 1.0).unwrap();
        for side in SideLabel::ALL {
            let r = oracle_largest_et_on_side(&tri, side, &quick_cfg());
            assert!((r.metrics.unwrap().side - 1.0).abs() < 1e-9);
            assert_eq!(r.mode, PlacementMode::WholeTriangle);
        }
    }

    #[test]
    fn oracle_finds_wedged_placement() {
        let tri =
            TriangleSpec::from_angle_values(70.0, 65.0, 45.0, SideLabel::A, sin_d(70.0)).unwrap();
        let r = oracle_largest_et_on_side(&tri, SideLabel::C, &quick_cfg());
        assert!(rel_err(r.metrics.unwrap().side, sin_d(45.0)) < 1e-6);
        assert_eq!(r.mode, PlacementMode::Wedged);
        assert!(!r.inscribed);
    }

    #[test]
    fn oracle_agrees_with_closed_form_on_sample() {
        let cfg = quick_cfg();
        for tri in sample_scalene_triangles(25, 42) {
            for side in SideLabel::ALL {
                let closed = largest_et_on_side(&tri, side, true).unwrap();
                let brute = oracle_largest_et_on_side(&tri, side, &cfg);
                let s_closed = closed.metrics.unwrap().side;
                let s_brute = brute.metrics.unwrap().side;
                assert!(
                    rel_err(s_closed, s_brute) < 1e-6,
                    "{:?} side {side}: {s_closed} vs {s_brute}",
                    tri.angles()
                );
                assert_eq!(brute.mode, closed.mode, "{:?} side {side}", tri.angles());
            }
        }
    }

    #[test]
    fn oracle_scale_equivariance() {
        let cfg = quick_cfg();
        let t1 = TriangleSpec::from_angle_values(100.0, 50.0, 30.0, SideLabel::A, 1.0).unwrap();
        let t2 = TriangleSpec::from_angle_values(100.0, 50.0, 30.0, SideLabel::A, 3.5).unwrap();
        for side in SideLabel::ALL {
            let s1 = oracle_largest_et_on_side(&t1, side, &cfg)
                .metrics
                .unwrap()
                .side;
            let s2 = oracle_largest_et_on_side(&t2, side, &cfg)
                .metrics
                .unwrap()
                .side;
            assert!(
                rel_err(s2, 3.5 * s1) < 1e-9,
                "side {side}: {s2} vs {}",
                3.5 * s1
            );
        }
    }

    #[test]
    fn oracle_monotone_under_refinement() {
        let tri = TriangleSpec::from_angle_values(95.0, 55.0, 30.0, SideLabel::A, 1.0).unwrap();
        for side in SideLabel::ALL {
            let coarse = OracleConfig {
                grid: 256,
                ..OracleConfig::default()
            };
            let fine = OracleConfig {
                grid: 512,
                ..OracleConfig::default()
            };
            let s_coarse = oracle_largest_et_on_side(&tri, side, &coarse)
                .metrics
                .unwrap()
                .side;
            let s_fine = oracle_largest_et_on_side(&tri, side, &fine)
                .metrics
                .unwrap()
                .side;
            assert!(s_fine >= s_coarse - 1e-9 * tri.longest_side());
        }
    }

    #[test]
    fn global_search_equilateral_ratio_one() {
        let tri = TriangleSpec::from_angle_values(60.0, 60.0, 60.0, SideLabel::A, 1.0).unwrap();
        let g = oracle_global_inscribed_et(&tri, &quick_cfg());
        assert!((g.metrics.side - 1.0).abs() < 1e-4);
    }

    #[test]
    fn global_search_matches_puzzle3_max() {
        let tri = TriangleSpec::from_angle_values(45.0, 75.0, 60.0, SideLabel::A, 2.0).unwrap();
        let g = oracle_global_inscribed_et(&tri, &quick_cfg());
        assert!(
            rel_err(g.metrics.area, 3.0f64.sqrt()) < 1e-4,
            "{}",
            g.metrics.area
        );
    }

    #[test]
    fn sampler_is_deterministic_and_respects_gaps() {
        let a = sample_scalene_triangles(50, 7);
        let b = sample_scalene_triangles(50, 7);
        assert_eq!(a.len(), 50);
        for (t1, t2) in a.iter().zip(&b) {
            assert_eq!(t1.angles().alpha(), t2.angles().alpha());
        }
        for t in &a {
            let ang = t.angles();
            assert!(ang.gamma() >= 5.0);
            assert!(ang.alpha() - ang.beta() >= 0.5);
            assert!(ang.beta() - ang.gamma() >= 0.5);
        }
    }
}
