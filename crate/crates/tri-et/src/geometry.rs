//! Planar primitives, equilateral-triangle metric conversions, and triangle
//! construction from angles or from an apex point over a unit base.
//!
//! Angles are degrees throughout the public API; radians stay internal.

use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance (degrees) for the angle-sum validity check.
pub const ANGLE_SUM_TOL_DEG: f64 = 1e-9;
/// Tolerance (degrees) for angle-equality decisions (ties, case boundaries).
pub const ANGLE_EQ_TOL_DEG: f64 = 1e-9;
/// Relative tolerance for side-length consistency with the Law of Sines.
pub const SIDE_REL_TOL: f64 = 1e-12;

pub(crate) const SQRT3: f64 = 1.732_050_807_568_877_2;

pub(crate) fn sin_deg(d: f64) -> f64 {
    d.to_radians().sin()
}

pub(crate) fn cos_deg(d: f64) -> f64 {
    d.to_radians().cos()
}

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both points as vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    /// Left-hand perpendicular (90° counterclockwise).
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotated_deg(self, angle_deg: f64) -> Point {
        let (s, c) = angle_deg.to_radians().sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

/// Interior angle at `p` of the triangle `p`, `q`, `r`, in degrees.
pub(crate) fn angle_at_deg(p: Point, q: Point, r: Point) -> f64 {
    let u = q - p;
    let v = r - p;
    u.cross(v).abs().atan2(u.dot(v)).to_degrees()
}

/// Side/height/area of an equilateral triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ETMetrics {
    pub side: f64,
    pub height: f64,
    pub area: f64,
}

impl ETMetrics {
    pub(crate) fn for_side(s: f64) -> Self {
        ETMetrics {
            side: s,
            height: s * SQRT3 / 2.0,
            area: s * s * SQRT3 / 4.0,
        }
    }
}

/// Metrics of the equilateral triangle with side `s`: `h = s√3/2`,
/// `area = s²√3/4`.
pub fn et_metrics_from_side(s: f64) -> Result<ETMetrics> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::InvalidInput(format!("side must be positive, got {s}")));
    }
    Ok(ETMetrics::for_side(s))
}

/// Metrics of the equilateral triangle with height `h`: `s = 2h√3/3`,
/// `area = h²√3/3`.
pub fn et_metrics_from_height(h: f64) -> Result<ETMetrics> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::InvalidInput(format!("height must be positive, got {h}")));
    }
    Ok(ETMetrics {
        side: 2.0 * h * SQRT3 / 3.0,
        height: h,
        area: h * h * SQRT3 / 3.0,
    })
}

/// Names a side of a triangle: side `a` is opposite vertex `A` (the first
/// input angle), and so on. When the angles are supplied in descending
/// order — the canonical labeling used by the classification rules — side
/// `a` is the long side, `b` the middle, `c` the short.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SideLabel {
    A,
    B,
    C,
}

impl SideLabel {
    pub const ALL: [SideLabel; 3] = [SideLabel::A, SideLabel::B, SideLabel::C];

    /// Index of the opposite vertex.
    pub fn index(self) -> usize {
        match self {
            SideLabel::A => 0,
            SideLabel::B => 1,
            SideLabel::C => 2,
        }
    }

    pub fn from_index(i: usize) -> SideLabel {
        Self::ALL[i]
    }
}

impl std::fmt::Display for SideLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideLabel::A => write!(f, "a"),
            SideLabel::B => write!(f, "b"),
            SideLabel::C => write!(f, "c"),
        }
    }
}

impl std::str::FromStr for SideLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "a" | "A" => Ok(SideLabel::A),
            "b" | "B" => Ok(SideLabel::B),
            "c" | "C" => Ok(SideLabel::C),
            other => Err(Error::InvalidInput(format!("unknown side label {other:?}"))),
        }
    }
}

/// Three interior angles in degrees, canonicalized to `alpha ≥ beta ≥ gamma`.
///
/// The constructor accepts the angles in any order and records the
/// permutation, so a triangle stated with a non-descending labeling keeps
/// its own vertex/side names while the classification rules see the
/// canonical ordering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleTriple {
    alpha: f64,
    beta: f64,
    gamma: f64,
    /// `perm[rank]` = input position of the rank-th largest angle.
    perm: [usize; 3],
}

impl AngleTriple {
    /// Validates and canonicalizes three angles given at vertices A, B, C.
    pub fn new(at_a: f64, at_b: f64, at_c: f64) -> Result<Self> {
        let input = [at_a, at_b, at_c];
        for (i, &v) in input.iter().enumerate() {
            if !v.is_finite() || v <= 0.0 || v >= 180.0 {
                return Err(Error::DegenerateTriangle(format!(
                    "angle {} = {v} is outside (0, 180)",
                    ["A", "B", "C"][i]
                )));
            }
        }
        let sum = at_a + at_b + at_c;
        if (sum - 180.0).abs() > ANGLE_SUM_TOL_DEG {
            return Err(Error::DegenerateTriangle(format!(
                "angles sum to {sum}, expected 180"
            )));
        }
        let mut perm = [0usize, 1, 2];
        // stable descending sort keeps ties in input order
        perm.sort_by(|&i, &j| input[j].partial_cmp(&input[i]).unwrap());
        Ok(AngleTriple {
            alpha: input[perm[0]],
            beta: input[perm[1]],
            gamma: input[perm[2]],
            perm,
        })
    }

    /// Largest angle.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Middle angle.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Smallest angle.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `perm[rank]` = input position (0 = at A) of the rank-th largest angle.
    pub fn permutation(&self) -> [usize; 3] {
        self.perm
    }

    /// The angles in their original vertex order (at A, at B, at C).
    pub fn input_order(&self) -> [f64; 3] {
        let mut out = [0.0; 3];
        out[self.perm[0]] = self.alpha;
        out[self.perm[1]] = self.beta;
        out[self.perm[2]] = self.gamma;
        out
    }

    pub fn is_equilateral(&self) -> bool {
        (self.alpha - self.gamma).abs() <= ANGLE_EQ_TOL_DEG
    }

    pub fn is_isosceles(&self) -> bool {
        (self.alpha - self.beta).abs() <= ANGLE_EQ_TOL_DEG
            || (self.beta - self.gamma).abs() <= ANGLE_EQ_TOL_DEG
    }
}

/// A concrete triangle: vertex coordinates plus the angle triple.
///
/// Vertices are counterclockwise with `A` at the origin and `B` on the
/// positive x-axis. Side `a` is opposite vertex `A` (so it joins `B` and
/// `C`), and likewise for `b` and `c`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleSpec {
    verts: [Point; 3],
    /// Interior angle (degrees) at each vertex.
    vert_angles: [f64; 3],
    angles: AngleTriple,
    /// `side_lengths[i]` = length of the side opposite vertex `i`.
    side_lengths: [f64; 3],
}

impl TriangleSpec {
    /// Builds a triangle from its angle triple, scaling the named side to
    /// the given length via the Law of Sines. `A = (0, 0)`, `B = (c, 0)`,
    /// `C` in the upper half-plane.
    pub fn from_angles(angles: AngleTriple, scale_side: SideLabel, scale: f64) -> Result<Self> {
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "scale must be positive, got {scale}"
            )));
        }
        let at = angles.input_order();
        // circumdiameter from the scaled side
        let diam = scale / sin_deg(at[scale_side.index()]);
        let side_lengths = [
            diam * sin_deg(at[0]),
            diam * sin_deg(at[1]),
            diam * sin_deg(at[2]),
        ];
        let verts = [
            Point::new(0.0, 0.0),
            Point::new(side_lengths[2], 0.0),
            Point::new(
                side_lengths[1] * cos_deg(at[0]),
                side_lengths[1] * sin_deg(at[0]),
            ),
        ];
        let spec = TriangleSpec {
            verts,
            vert_angles: at,
            angles,
            side_lengths,
        };
        // Law of Sines consistency: |BC| must reproduce side a
        let bc = verts[1].distance(verts[2]);
        if (bc - side_lengths[0]).abs() > SIDE_REL_TOL.max(1e-12) * side_lengths[0].max(bc) * 8.0 {
            return Err(Error::DegenerateTriangle(format!(
                "side lengths inconsistent with the Law of Sines: {bc} vs {}",
                side_lengths[0]
            )));
        }
        Ok(spec)
    }

    /// Convenience wrapper taking raw angle values at A, B, C.
    pub fn from_angle_values(
        at_a: f64,
        at_b: f64,
        at_c: f64,
        scale_side: SideLabel,
        scale: f64,
    ) -> Result<Self> {
        Self::from_angles(AngleTriple::new(at_a, at_b, at_c)?, scale_side, scale)
    }

    /// Triangle with unit base `A = (0,0)`, `B = (1,0)` and apex `C = (x,y)`.
    pub fn from_apex(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || y <= 0.0 {
            return Err(Error::DegenerateTriangle(format!(
                "apex ({x}, {y}) must lie strictly above the base"
            )));
        }
        let verts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(x, y)];
        let vert_angles = [
            angle_at_deg(verts[0], verts[1], verts[2]),
            angle_at_deg(verts[1], verts[2], verts[0]),
            angle_at_deg(verts[2], verts[0], verts[1]),
        ];
        let angles = AngleTriple::new(vert_angles[0], vert_angles[1], vert_angles[2])?;
        let side_lengths = [
            verts[1].distance(verts[2]),
            verts[2].distance(verts[0]),
            verts[0].distance(verts[1]),
        ];
        Ok(TriangleSpec {
            verts,
            vert_angles,
            angles,
            side_lengths,
        })
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.verts
    }

    /// Interior angles (degrees) at vertices A, B, C.
    pub fn vertex_angles(&self) -> [f64; 3] {
        self.vert_angles
    }

    /// The canonicalized angle triple.
    pub fn angles(&self) -> &AngleTriple {
        &self.angles
    }

    pub fn side_length(&self, side: SideLabel) -> f64 {
        self.side_lengths[side.index()]
    }

    /// Endpoints of a side, directed counterclockwise around the triangle
    /// (interior on the left).
    pub fn side_endpoints(&self, side: SideLabel) -> (Point, Point) {
        match side {
            SideLabel::A => (self.verts[1], self.verts[2]),
            SideLabel::B => (self.verts[2], self.verts[0]),
            SideLabel::C => (self.verts[0], self.verts[1]),
        }
    }

    pub fn opposite_vertex(&self, side: SideLabel) -> Point {
        self.verts[side.index()]
    }

    /// Interior angles (degrees) at the start and end of the directed side.
    pub fn adjacent_angles(&self, side: SideLabel) -> (f64, f64) {
        match side {
            SideLabel::A => (self.vert_angles[1], self.vert_angles[2]),
            SideLabel::B => (self.vert_angles[2], self.vert_angles[0]),
            SideLabel::C => (self.vert_angles[0], self.vert_angles[1]),
        }
    }

    /// Maps a side of this triangle to its canonical label: the longest
    /// side maps to `a`, the middle to `b`, the shortest to `c`. Identity
    /// when the input angles were already in descending order.
    pub fn canonical_label(&self, side: SideLabel) -> SideLabel {
        let perm = self.angles.permutation();
        let rank = perm.iter().position(|&p| p == side.index()).unwrap();
        SideLabel::from_index(rank)
    }

    /// Inverse of [`TriangleSpec::canonical_label`]: the side of this
    /// triangle holding the given canonical rank.
    pub fn side_for_canonical(&self, canonical: SideLabel) -> SideLabel {
        SideLabel::from_index(self.angles.permutation()[canonical.index()])
    }

    pub fn area(&self) -> f64 {
        let [a, b, c] = self.verts;
        ((b - a).cross(c - a) / 2.0).abs()
    }

    pub fn longest_side(&self) -> f64 {
        self.side_lengths.iter().cloned().fold(0.0, f64::max)
    }

    pub fn is_equilateral(&self) -> bool {
        self.angles.is_equilateral()
    }

    /// True if `p` lies in the closed triangle, within `tol` (a length).
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let [a, b, c] = self.verts;
        for (u, v) in [(a, b), (b, c), (c, a)] {
            let edge = v - u;
            // signed distance of p from the (CCW) edge line, interior positive
            if edge.cross(p - u) / edge.norm() < -tol {
                return false;
            }
        }
        true
    }

    /// Distance from `p` to the nearest point of the triangle's boundary.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        let [a, b, c] = self.verts;
        [(a, b), (b, c), (c, a)]
            .into_iter()
            .map(|(u, v)| segment_distance(p, u, v))
            .fold(f64::INFINITY, f64::min)
    }
}

fn segment_distance(p: Point, u: Point, v: Point) -> f64 {
    let d = v - u;
    let t = ((p - u).dot(d) / d.dot(d)).clamp(0.0, 1.0);
    (p - (u + d * t)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn et_metrics_from_side_known_values() {
        let m = et_metrics_from_side(2.0).unwrap();
        assert!((m.area - SQRT3).abs() < 1e-12);
        let m = et_metrics_from_side(1.0).unwrap();
        assert!((m.height - SQRT3 / 2.0).abs() < 1e-15);
        assert!((m.area - SQRT3 / 4.0).abs() < 1e-15);
        let m = et_metrics_from_side(1e-6).unwrap();
        assert!(m.area > 0.0);
        assert!(rel_close(m.area, 1e-12 * SQRT3 / 4.0, 1e-12));
    }

    #[test]
    fn et_metrics_from_height_known_values() {
        let m = et_metrics_from_height(1.0).unwrap();
        assert!(rel_close(m.side, 2.0 * SQRT3 / 3.0, 1e-15));
        assert!(rel_close(m.area, SQRT3 / 3.0, 1e-15));
        let m = et_metrics_from_height(SQRT3 / 2.0).unwrap();
        assert!(rel_close(m.side, 1.0, 1e-15));
    }

    #[test]
    fn et_metrics_round_trip() {
        for s in [0.1, 1.0, 7.0] {
            let m = et_metrics_from_side(s).unwrap();
            let back = et_metrics_from_height(m.height).unwrap();
            assert!(rel_close(back.side, s, 1e-12), "s = {s}");
        }
    }

    #[test]
    fn et_metrics_reject_non_positive() {
        assert!(et_metrics_from_side(0.0).is_err());
        assert!(et_metrics_from_side(-1.0).is_err());
        assert!(et_metrics_from_side(f64::NAN).is_err());
        assert!(et_metrics_from_height(0.0).is_err());
    }

    #[test]
    fn angle_triple_canonicalizes_and_remembers_order() {
        let t = AngleTriple::new(45.0, 75.0, 60.0).unwrap();
        assert_eq!((t.alpha(), t.beta(), t.gamma()), (75.0, 60.0, 45.0));
        assert_eq!(t.permutation(), [1, 2, 0]);
        assert_eq!(t.input_order(), [45.0, 75.0, 60.0]);
    }

    #[test]
    fn angle_triple_rejects_bad_input() {
        assert!(AngleTriple::new(0.0, 90.0, 90.0).is_err());
        assert!(AngleTriple::new(180.0, -10.0, 10.0).is_err());
        assert!(AngleTriple::new(60.0, 60.0, 60.1).is_err());
        assert!(AngleTriple::new(f64::NAN, 60.0, 60.0).is_err());
    }

    #[test]
    fn puzzle3_triangle_side_lengths() {
        // 45-75-60 at A/B/C with a = |BC| = 2 gives c = |AB| = sqrt(6)
        let tri = TriangleSpec::from_angle_values(45.0, 75.0, 60.0, SideLabel::A, 2.0).unwrap();
        assert!(rel_close(tri.side_length(SideLabel::C), 6.0_f64.sqrt(), 1e-14));
        assert!(rel_close(
            tri.side_length(SideLabel::B),
            1.0 + SQRT3, // 2 sin 75° / sin 45°
            1e-14
        ));
        // canonical view: the 2-side (opposite 45°) is the short side c
        assert_eq!(tri.canonical_label(SideLabel::A), SideLabel::C);
        assert_eq!(tri.canonical_label(SideLabel::B), SideLabel::A);
        assert_eq!(tri.canonical_label(SideLabel::C), SideLabel::B);
    }

    #[test]
    fn equilateral_unit_sides() {
        let tri = TriangleSpec::from_angle_values(60.0, 60.0, 60.0, SideLabel::A, 1.0).unwrap();
        for s in SideLabel::ALL {
            assert!(rel_close(tri.side_length(s), 1.0, 1e-14));
        }
    }

    #[test]
    fn right_triangle_30_60_90_ratios() {
        let tri = TriangleSpec::from_angle_values(90.0, 60.0, 30.0, SideLabel::C, 1.0).unwrap();
        assert!(rel_close(tri.side_length(SideLabel::B), SQRT3, 1e-14));
        assert!(rel_close(tri.side_length(SideLabel::A), 2.0, 1e-14));
    }

    #[test]
    fn from_apex_equilateral() {
        let tri = TriangleSpec::from_apex(0.5, SQRT3 / 2.0).unwrap();
        for ang in tri.vertex_angles() {
            assert!((ang - 60.0).abs() < 1e-12);
        }
    }

    #[test]
    fn from_apex_recovers_placed_triangle() {
        // C = (sin beta / sin gamma)(cos alpha, sin alpha) for 110-40-30
        let (al, be, ga) = (110.0f64, 40.0f64, 30.0f64);
        let r = sin_deg(be) / sin_deg(ga);
        let tri = TriangleSpec::from_apex(r * cos_deg(al), r * sin_deg(al)).unwrap();
        let angs = tri.vertex_angles();
        assert!((angs[0] - al).abs() < 1e-9);
        assert!((angs[1] - be).abs() < 1e-9);
        assert!((angs[2] - ga).abs() < 1e-9);
    }

    #[test]
    fn from_apex_isosceles_80_80_20() {
        let tri = TriangleSpec::from_apex(0.5, 80f64.to_radians().tan() / 2.0).unwrap();
        let angs = tri.vertex_angles();
        assert!((angs[0] - 80.0).abs() < 1e-9);
        assert!((angs[1] - 80.0).abs() < 1e-9);
        assert!((angs[2] - 20.0).abs() < 1e-9);
        // angle sum recomputed from coordinates
        assert!((angs.iter().sum::<f64>() - 180.0).abs() < 1e-9);
    }

    #[test]
    fn from_apex_rejects_lower_half_plane() {
        assert!(TriangleSpec::from_apex(0.3, 0.0).is_err());
        assert!(TriangleSpec::from_apex(0.3, -1.0).is_err());
    }

    #[test]
    fn angle_order_matches_side_order() {
        let tri = TriangleSpec::from_angle_values(100.0, 50.0, 30.0, SideLabel::A, 1.0).unwrap();
        assert!(tri.side_length(SideLabel::A) > tri.side_length(SideLabel::B));
        assert!(tri.side_length(SideLabel::B) > tri.side_length(SideLabel::C));
    }

    #[test]
    fn containment_and_boundary() {
        let tri = TriangleSpec::from_angle_values(60.0, 60.0, 60.0, SideLabel::A, 1.0).unwrap();
        assert!(tri.contains(Point::new(0.5, 0.2), 1e-12));
        assert!(!tri.contains(Point::new(0.5, -0.01), 1e-12));
        assert!(tri.boundary_distance(Point::new(0.5, 0.0)) < 1e-15);
    }
}
