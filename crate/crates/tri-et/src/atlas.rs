//! Region atlas for the apex point `C` over the unit base `A = (0,0)`,
//! `B = (1,0)`.
//!
//! With the scalene constraint `a > b > c` the apex lives left of the
//! perpendicular bisector `x = 1/2` and outside the unit circle about `A`.
//! The admissible zone splits into region A (`α > 120°`), region B
//! (`60° < α < 120°`, `β < 60°`) and region C (`β > 60°`), whose wedged-ET
//! subregions C.1, C.2i, C.2ii and C.3 are separated by the rays `α = 90°`,
//! `β = 60°` and two cubic curves:
//!
//! * green, the `α/2 + β = 120°` locus, polar form
//!   `r = sin(60° + θ/2)/sin(60° − θ/2)`;
//! * blue, the `α + β/2 = 120°` locus, polar form
//!   `r = sin(240° − 2θ)/sin(θ − 60°)`;
//!
//! both over `80° < θ < 90°`, meeting at the Calabi point
//! `I = (1/2, tan 80°/2)` — the apex of the isosceles 80-80-20 triangle.

use serde::Serialize;

use crate::classifier::{predict_minmax_wet, RuleId};
use crate::error::{Error, Result};
use crate::geometry::{cos_deg, sin_deg, Point, TriangleSpec, SQRT3};

/// Half-width of the band (degrees for angle loci, length for the scalene
/// comparisons) inside which a point is labeled as on a boundary.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Apex of the isosceles triangle with 80° base angles, where the two
/// cubics intersect.
pub fn calabi_point() -> Point {
    Point::new(0.5, 80f64.to_radians().tan() / 2.0)
}

/// A named boundary locus of the atlas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundaryKind {
    /// The Calabi point `I` on the isosceles line.
    CalabiPoint,
    /// `x = 1/2`, where `a = b`.
    IsoscelesLine,
    /// Unit circle about `A`, where `b = c`.
    UnitCircle,
    /// Region A / region B separator.
    AlphaEq120,
    /// Region B / region C separator.
    BetaEq60,
    /// Separates C.1 and C.2 from C.3.
    AlphaEq90,
    /// Green cubic `α/2 + β = 120°`, between C.2i and C.2ii.
    GreenCubic,
    /// Blue cubic `α + β/2 = 120°`, between C.1 and C.2i.
    BlueCubic,
}

impl std::fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundaryKind::CalabiPoint => "Calabi point I / isosceles line",
            BoundaryKind::IsoscelesLine => "isosceles line x = 1/2 (a = b)",
            BoundaryKind::UnitCircle => "unit circle about A (b = c)",
            BoundaryKind::AlphaEq120 => "alpha = 120",
            BoundaryKind::BetaEq60 => "beta = 60",
            BoundaryKind::AlphaEq90 => "alpha = 90",
            BoundaryKind::GreenCubic => "green cubic (alpha/2 + beta = 120)",
            BoundaryKind::BlueCubic => "blue cubic (alpha + beta/2 = 120)",
        };
        write!(f, "{s}")
    }
}

/// Why an apex point is outside the admissible scalene zone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Exclusion {
    /// `a < b`: apex right of the isosceles line.
    LongMiddleOrder,
    /// `b < c`: apex inside the unit circle about `A`.
    MiddleShortOrder,
    /// Below or on the base line (raster bookkeeping only; `classify_apex`
    /// itself rejects such points).
    LowerHalfPlane,
}

impl std::fmt::Display for Exclusion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Exclusion::LongMiddleOrder => "a < b (right of the isosceles line)",
            Exclusion::MiddleShortOrder => "b < c (inside the unit circle)",
            Exclusion::LowerHalfPlane => "y <= 0",
        };
        write!(f, "{s}")
    }
}

/// Classification of an apex point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RegionLabel {
    A,
    B,
    C1,
    C2i,
    C2ii,
    C3,
    Boundary(BoundaryKind),
    Excluded(Exclusion),
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionLabel::A => write!(f, "A"),
            RegionLabel::B => write!(f, "B"),
            RegionLabel::C1 => write!(f, "C.1"),
            RegionLabel::C2i => write!(f, "C.2i"),
            RegionLabel::C2ii => write!(f, "C.2ii"),
            RegionLabel::C3 => write!(f, "C.3"),
            RegionLabel::Boundary(b) => write!(f, "boundary: {b}"),
            RegionLabel::Excluded(e) => write!(f, "excluded: {e}"),
        }
    }
}

/// Classifies the apex `C = (x, y)` over the unit base into its region.
///
/// Points within [`BOUNDARY_BAND`] of a named locus report that boundary;
/// points violating `a > b > c` beyond the band report the exclusion.
pub fn classify_apex(x: f64, y: f64) -> Result<RegionLabel> {
    let tri = TriangleSpec::from_apex(x, y)?;
    let verts = tri.vertices();
    let a = verts[1].distance(verts[2]);
    let b = verts[0].distance(verts[2]);
    // c = 1 by construction

    let i = calabi_point();
    if (x - i.x).abs() <= BOUNDARY_BAND && (y - i.y).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::CalabiPoint));
    }
    if (a - b).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::IsoscelesLine));
    }
    if (b - 1.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::UnitCircle));
    }
    if a < b {
        return Ok(RegionLabel::Excluded(Exclusion::LongMiddleOrder));
    }
    if b < 1.0 {
        return Ok(RegionLabel::Excluded(Exclusion::MiddleShortOrder));
    }

    // strictly scalene from here: canonical angles match the positions
    let (al, be) = (tri.angles().alpha(), tri.angles().beta());
    if (al - 120.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::AlphaEq120));
    }
    if (be - 60.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::BetaEq60));
    }
    if al > 120.0 {
        return Ok(RegionLabel::A);
    }
    if be < 60.0 {
        return Ok(RegionLabel::B);
    }
    if (al - 90.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::AlphaEq90));
    }
    if al < 90.0 && (al + be / 2.0 - 120.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::BlueCubic));
    }
    if al < 90.0 && (al / 2.0 + be - 120.0).abs() <= BOUNDARY_BAND {
        return Ok(RegionLabel::Boundary(BoundaryKind::GreenCubic));
    }
    let rule = predict_minmax_wet(tri.angles())?.rule;
    Ok(match rule {
        RuleId::WedgedC1 => RegionLabel::C1,
        RuleId::WedgedC2i => RegionLabel::C2i,
        RuleId::WedgedC2ii => RegionLabel::C2ii,
        RuleId::WedgedC3i | RuleId::WedgedC3ii => RegionLabel::C3,
        // the band checks above exhaust the other outcomes
        other => unreachable!("scalene region-C apex classified as {other:?}"),
    })
}

fn check_theta(theta_deg: f64) -> Result<()> {
    if !(80.0..=90.0).contains(&theta_deg) {
        return Err(Error::InvalidInput(format!(
            "theta = {theta_deg} outside the curve domain [80, 90]"
        )));
    }
    Ok(())
}

/// Green curve `r = sin(60° + θ/2)/sin(60° − θ/2)`: the apex at polar angle
/// `θ = α` and this radius satisfies `α/2 + β = 120°`. Domain `(80°, 90°)`,
/// accepted on its closure.
pub fn green_curve_polar(theta_deg: f64) -> Result<f64> {
    check_theta(theta_deg)?;
    Ok(sin_deg(60.0 + theta_deg / 2.0) / sin_deg(60.0 - theta_deg / 2.0))
}

/// Blue curve `r = sin(240° − 2θ)/sin(θ − 60°)`: the apex at polar angle
/// `θ = α` and this radius satisfies `α + β/2 = 120°`. Domain `(80°, 90°)`,
/// accepted on its closure.
pub fn blue_curve_polar(theta_deg: f64) -> Result<f64> {
    check_theta(theta_deg)?;
    Ok(sin_deg(240.0 - 2.0 * theta_deg) / sin_deg(theta_deg - 60.0))
}

/// Rectangular point of a polar sample about the pole `A = (0,0)`.
pub fn polar_to_point(r: f64, theta_deg: f64) -> Point {
    Point::new(r * cos_deg(theta_deg), r * sin_deg(theta_deg))
}

/// Rectangular form of the green curve:
/// `√3x³ + x²(y − 2√3) + √3x(y² + 1) + y³ − 2√3y² − y`.
pub fn eval_green_cubic(x: f64, y: f64) -> f64 {
    SQRT3 * x.powi(3) + x * x * (y - 2.0 * SQRT3) + SQRT3 * x * (y * y + 1.0) + y.powi(3)
        - 2.0 * SQRT3 * y * y
        - y
}

/// Rectangular form of the blue curve:
/// `√3x³ − x²(y + √3) + x(√3y² + 2y) + √3y² − y³`.
pub fn eval_blue_cubic(x: f64, y: f64) -> f64 {
    SQRT3 * x.powi(3) - x * x * (y + SQRT3) + x * (SQRT3 * y * y + 2.0 * y) + SQRT3 * y * y
        - y.powi(3)
}

/// Identifies a sampled curve in the atlas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CurveId {
    GreenCubic,
    BlueCubic,
    IsoscelesLine,
    UnitCircle,
    /// Ray from `A` where the apex sees `α` at the given value.
    AlphaLocus(f64),
    /// Ray from `B` where the apex sees `β` at the given value.
    BetaLocus(f64),
}

/// An ordered polyline sample of one curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePolyline {
    pub id: CurveId,
    pub points: Vec<Point>,
    /// Parameter range in degrees for polar-sampled curves.
    pub theta_range: Option<(f64, f64)>,
}

/// Axis-aligned atlas window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite())
            || x1 <= x0
            || y1 <= y0
        {
            return Err(Error::InvalidInput(format!(
                "window ({x0}, {y0})..({x1}, {y1}) is empty"
            )));
        }
        Ok(Window { x0, y0, x1, y1 })
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

/// Window covering all regions, both cubics and the excluded zone.
pub fn default_window() -> Window {
    Window {
        x0: -3.0,
        y0: 0.0,
        x1: 1.5,
        y1: 4.5,
    }
}

/// Classification raster of a window, row-major from the bottom row up,
/// sampled at cell centers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtlasRaster {
    pub window: Window,
    pub width: usize,
    pub height: usize,
    pub labels: Vec<RegionLabel>,
}

impl AtlasRaster {
    pub fn label(&self, col: usize, row: usize) -> RegionLabel {
        self.labels[row * self.width + col]
    }

    /// Center coordinates of a raster cell.
    pub fn cell_center(&self, col: usize, row: usize) -> Point {
        Point::new(
            self.window.x0 + (col as f64 + 0.5) / self.width as f64 * self.window.width(),
            self.window.y0 + (row as f64 + 0.5) / self.height as f64 * self.window.height(),
        )
    }
}

/// Sampled curves plus the classification raster for one window.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Atlas {
    pub curves: Vec<CurvePolyline>,
    pub raster: AtlasRaster,
    pub calabi: Point,
}

fn sample_polar_curve(
    id: CurveId,
    f: impl Fn(f64) -> Result<f64>,
    samples: usize,
) -> Result<CurvePolyline> {
    let (lo, hi) = (80.0, 90.0);
    let mut points = Vec::with_capacity(samples);
    for k in 0..samples {
        let theta = lo + (hi - lo) * k as f64 / (samples - 1) as f64;
        points.push(polar_to_point(f(theta)?, theta));
    }
    Ok(CurvePolyline {
        id,
        points,
        theta_range: Some((lo, hi)),
    })
}

/// Clips the ray `origin + t·dir`, `t ≥ 0`, to the window; `None` if the ray
/// misses it.
fn clip_ray(origin: Point, dir: Point, w: &Window) -> Option<(Point, Point)> {
    let mut t0: f64 = 0.0;
    let mut t1 = f64::INFINITY;
    for (o, d, lo, hi) in [
        (origin.x, dir.x, w.x0, w.x1),
        (origin.y, dir.y, w.y0, w.y1),
    ] {
        if d.abs() < 1e-300 {
            if o < lo || o > hi {
                return None;
            }
        } else {
            let (ta, tb) = ((lo - o) / d, (hi - o) / d);
            t0 = t0.max(ta.min(tb));
            t1 = t1.min(ta.max(tb));
        }
    }
    (t0 < t1).then(|| (origin + dir * t0, origin + dir * t1))
}

/// Builds the atlas: both cubics sampled from their polar forms, the
/// isosceles line, the unit circle, the `α` and `β` angle loci, and a
/// `width × height` classification raster of the window.
pub fn build_atlas(
    theta_samples: usize,
    window: Window,
    width: usize,
    height: usize,
) -> Result<Atlas> {
    if theta_samples < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 curve samples, got {theta_samples}"
        )));
    }
    if width == 0 || height == 0 {
        return Err(Error::InvalidInput(format!(
            "raster {width}x{height} is empty"
        )));
    }
    Window::new(window.x0, window.y0, window.x1, window.y1)?;

    let mut curves = vec![
        sample_polar_curve(CurveId::GreenCubic, green_curve_polar, theta_samples)?,
        sample_polar_curve(CurveId::BlueCubic, blue_curve_polar, theta_samples)?,
    ];

    // isosceles line x = 1/2 within the window
    if window.x0 <= 0.5 && 0.5 <= window.x1 {
        curves.push(CurvePolyline {
            id: CurveId::IsoscelesLine,
            points: vec![
                Point::new(0.5, window.y0.max(0.0)),
                Point::new(0.5, window.y1),
            ],
            theta_range: None,
        });
    }

    // unit circle about A, upper half
    let circle_pts: Vec<Point> = (0..=theta_samples)
        .map(|k| {
            let phi = 180.0 * k as f64 / theta_samples as f64;
            Point::new(cos_deg(phi), sin_deg(phi))
        })
        .collect();
    curves.push(CurvePolyline {
        id: CurveId::UnitCircle,
        points: circle_pts,
        theta_range: Some((0.0, 180.0)),
    });

    // angle loci: rays from A for alpha, from B for beta
    let a_pole = Point::new(0.0, 0.0);
    let b_pole = Point::new(1.0, 0.0);
    for alpha in [90.0, 120.0] {
        if let Some((p0, p1)) = clip_ray(
            a_pole,
            Point::new(cos_deg(alpha), sin_deg(alpha)),
            &window,
        ) {
            curves.push(CurvePolyline {
                id: CurveId::AlphaLocus(alpha),
                points: vec![p0, p1],
                theta_range: None,
            });
        }
    }
    for beta in [60.0, 80.0] {
        if let Some((p0, p1)) = clip_ray(
            b_pole,
            Point::new(cos_deg(180.0 - beta), sin_deg(180.0 - beta)),
            &window,
        ) {
            curves.push(CurvePolyline {
                id: CurveId::BetaLocus(beta),
                points: vec![p0, p1],
                theta_range: None,
            });
        }
    }

    let mut labels = Vec::with_capacity(width * height);
    for row in 0..height {
        for col in 0..width {
            let x = window.x0 + (col as f64 + 0.5) / width as f64 * window.width();
            let y = window.y0 + (row as f64 + 0.5) / height as f64 * window.height();
            let label = if y <= 0.0 {
                RegionLabel::Excluded(Exclusion::LowerHalfPlane)
            } else {
                classify_apex(x, y)?
            };
            labels.push(label);
        }
    }

    Ok(Atlas {
        curves,
        raster: AtlasRaster {
            window,
            width,
            height,
            labels,
        },
        calabi: calabi_point(),
    })
}

/// True when the angles at an apex sit within `band` degrees of some locus
/// that the atlas draws; used to keep raster consistency checks off the
/// boundary bands.
pub fn near_drawn_locus(x: f64, y: f64, band: f64) -> bool {
    match TriangleSpec::from_apex(x, y) {
        Err(_) => true,
        Ok(tri) => {
            let (al, be) = (tri.angles().alpha(), tri.angles().beta());
            let verts = tri.vertices();
            let a = verts[1].distance(verts[2]);
            let b = verts[0].distance(verts[2]);
            (al - 120.0).abs() <= band
                || (be - 60.0).abs() <= band
                || (al - 90.0).abs() <= band
                || (al + be / 2.0 - 120.0).abs() <= band
                || (al / 2.0 + be - 120.0).abs() <= band
                || (a - b).abs() <= band
                || (b - 1.0).abs() <= band
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_excluded_points() {
        assert_eq!(
            classify_apex(0.3, 0.2).unwrap(),
            RegionLabel::Excluded(Exclusion::MiddleShortOrder)
        );
        assert_eq!(
            classify_apex(0.9, 2.0).unwrap(),
            RegionLabel::Excluded(Exclusion::LongMiddleOrder)
        );
        assert!(classify_apex(0.3, 0.0).is_err());
        assert!(classify_apex(0.3, -1.0).is_err());
    }

    #[test]
    fn classify_region_b_point() {
        // apex of the 110-40-30 triangle
        let r = sin_deg(40.0) / sin_deg(30.0);
        let label = classify_apex(r * cos_deg(110.0), r * sin_deg(110.0)).unwrap();
        assert_eq!(label, RegionLabel::B);
    }

    #[test]
    fn classify_region_a_point() {
        let r = sin_deg(30.0) / sin_deg(20.0);
        let label = classify_apex(r * cos_deg(130.0), r * sin_deg(130.0)).unwrap();
        assert_eq!(label, RegionLabel::A);
    }

    #[test]
    fn classify_calabi_point_is_boundary() {
        let i = calabi_point();
        assert_eq!(
            classify_apex(i.x, i.y).unwrap(),
            RegionLabel::Boundary(BoundaryKind::CalabiPoint)
        );
        // elsewhere on the isosceles line
        assert_eq!(
            classify_apex(0.5, 2.0).unwrap(),
            RegionLabel::Boundary(BoundaryKind::IsoscelesLine)
        );
    }

    #[test]
    fn classify_c_subregions() {
        for (angles, want) in [
            ((70.0, 65.0, 45.0), RegionLabel::C1),
            ((86.0, 70.0, 24.0), RegionLabel::C2i),
            ((84.0, 79.0, 17.0), RegionLabel::C2ii),
            ((100.0, 75.0, 5.0), RegionLabel::C3),
            ((95.0, 62.0, 23.0), RegionLabel::C3),
        ] {
            let (al, be, ga) = angles;
            let r = sin_deg(be) / sin_deg(ga);
            let label = classify_apex(r * cos_deg(al), r * sin_deg(al)).unwrap();
            assert_eq!(label, want, "angles {angles:?}");
        }
    }

    #[test]
    fn polar_limit_values() {
        assert!((green_curve_polar(80.0).unwrap() - 2.879_385_241_571_817).abs() < 1e-12);
        assert!((blue_curve_polar(80.0).unwrap() - 2.879_385_241_571_817).abs() < 1e-12);
        assert!((green_curve_polar(90.0).unwrap() - (2.0 + SQRT3)).abs() < 1e-12);
        assert!((blue_curve_polar(90.0).unwrap() - SQRT3).abs() < 1e-12);
        assert!(green_curve_polar(79.9).is_err());
        assert!(blue_curve_polar(90.1).is_err());
    }

    #[test]
    fn polar_samples_satisfy_angle_conditions() {
        for k in 0..=20 {
            let theta = 80.0 + 10.0 * k as f64 / 20.0;
            let g = polar_to_point(green_curve_polar(theta).unwrap(), theta);
            let tri = TriangleSpec::from_apex(g.x, g.y).unwrap();
            let (al, be) = (tri.angles().alpha(), tri.angles().beta());
            assert!((al / 2.0 + be - 120.0).abs() < 1e-9, "green theta={theta}");

            let b = polar_to_point(blue_curve_polar(theta).unwrap(), theta);
            let tri = TriangleSpec::from_apex(b.x, b.y).unwrap();
            let (al, be) = (tri.angles().alpha(), tri.angles().beta());
            assert!((al + be / 2.0 - 120.0).abs() < 1e-9, "blue theta={theta}");
        }
    }

    #[test]
    fn blue_sample_theta_88_angles() {
        let p = polar_to_point(blue_curve_polar(88.0).unwrap(), 88.0);
        let tri = TriangleSpec::from_apex(p.x, p.y).unwrap();
        assert!((tri.angles().beta() - 64.0).abs() < 1e-9);
        assert!((tri.angles().gamma() - 28.0).abs() < 1e-9);
    }

    #[test]
    fn cubics_vanish_on_their_polar_samples() {
        for k in 0..=256 {
            let theta = 80.0 + 10.0 * k as f64 / 256.0;
            let g = polar_to_point(green_curve_polar(theta).unwrap(), theta);
            assert!(eval_green_cubic(g.x, g.y).abs() <= 1e-9, "green {theta}");
            let b = polar_to_point(blue_curve_polar(theta).unwrap(), theta);
            assert!(eval_blue_cubic(b.x, b.y).abs() <= 1e-9, "blue {theta}");
        }
    }

    #[test]
    fn cubics_vanish_at_origin_and_calabi_point() {
        assert_eq!(eval_green_cubic(0.0, 0.0), 0.0);
        assert_eq!(eval_blue_cubic(0.0, 0.0), 0.0);
        let i = calabi_point();
        assert!(eval_green_cubic(i.x, i.y).abs() <= 1e-9);
        assert!(eval_blue_cubic(i.x, i.y).abs() <= 1e-9);
    }

    #[test]
    fn cubics_mirror_about_half_line() {
        for ix in 0..100 {
            for iy in 0..100 {
                let x = -3.0 + 4.5 * ix as f64 / 99.0;
                let y = 0.0 + 4.5 * iy as f64 / 99.0;
                let d = eval_green_cubic(x, y) + eval_blue_cubic(1.0 - x, y);
                assert!(d.abs() <= 1e-9, "({x}, {y}): {d}");
            }
        }
    }

    #[test]
    fn atlas_polylines_pass_residual_checks() {
        let atlas = build_atlas(256, default_window(), 40, 40).unwrap();
        for curve in &atlas.curves {
            match curve.id {
                CurveId::GreenCubic => {
                    assert_eq!(curve.points.len(), 256);
                    for p in &curve.points {
                        assert!(eval_green_cubic(p.x, p.y).abs() <= 1e-9);
                    }
                }
                CurveId::BlueCubic => {
                    for p in &curve.points {
                        assert!(eval_blue_cubic(p.x, p.y).abs() <= 1e-9);
                    }
                }
                _ => {}
            }
        }
    }

    #[test]
    fn atlas_rejects_bad_input() {
        assert!(build_atlas(1, default_window(), 10, 10).is_err());
        assert!(build_atlas(16, default_window(), 0, 10).is_err());
        assert!(Window::new(0.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn raster_changes_from_c2i_to_c2ii_across_green_curve() {
        // straddle the green curve at theta = 85 along the radial direction
        let theta = 85.0;
        let r = green_curve_polar(theta).unwrap();
        let inner = polar_to_point(r * (1.0 - 1e-4), theta);
        let outer = polar_to_point(r * (1.0 + 1e-4), theta);
        // larger r at fixed alpha pushes beta up: outer side is C.2ii
        assert_eq!(classify_apex(inner.x, inner.y).unwrap(), RegionLabel::C2i);
        assert_eq!(classify_apex(outer.x, outer.y).unwrap(), RegionLabel::C2ii);
    }

    #[test]
    fn raster_is_deterministic() {
        let w = Window::new(-1.0, 0.5, 1.0, 3.5).unwrap();
        let a1 = build_atlas(64, w, 24, 24).unwrap();
        let a2 = build_atlas(64, w, 24, 24).unwrap();
        assert_eq!(a1, a2);
    }

    #[test]
    fn reflected_green_polyline_lies_on_blue_cubic() {
        let atlas = build_atlas(256, default_window(), 8, 8).unwrap();
        let green = atlas
            .curves
            .iter()
            .find(|c| c.id == CurveId::GreenCubic)
            .unwrap();
        for p in &green.points {
            assert!(eval_blue_cubic(1.0 - p.x, p.y).abs() <= 1e-9);
        }
    }
}
