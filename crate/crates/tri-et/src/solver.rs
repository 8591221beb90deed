//! Largest equilateral triangle with base on a given side, by case analysis
//! on the two angles adjacent to that side.
//!
//! With `t1 ≤ t2` the adjacent angles and `L` the side length:
//!
//! * both `< 60°` — the ET apex sits at the opposite vertex and
//!   `s = 2h√3/3` for the altitude `h` to the side;
//! * `t1 ≤ 60° ≤ t2` — the ET shares the endpoint with the larger angle
//!   and `s = h'/sin(60° + t1)`, `h'` the altitude from that endpoint to
//!   its opposite side (equivalently `s = L·sin t1/sin(60° + t1)`);
//! * both `> 60°` — no inscribed ET exists; the largest ET spanning the
//!   whole side is *wedged* (`s = L`, apex strictly interior).
//!
//! Angles exactly at 60° are routed to the shared-vertex case, where the
//! formula agrees with both neighbours, keeping `s` continuous.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{
    sin_deg, ETMetrics, Point, SideLabel, TriangleSpec, ANGLE_EQ_TOL_DEG, SQRT3,
};

/// Default relative tolerance for grouping per-side areas into ties.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// How the largest ET sits on a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlacementMode {
    /// Both adjacent angles below 60°: apex coincides with the opposite vertex.
    ApexAtOppositeVertex,
    /// Exactly one adjacent angle at or above 60°: the ET shares that endpoint.
    SharedVertex,
    /// Both adjacent angles above 60°: base spans the side, apex interior.
    Wedged,
    /// Equilateral input: the ET is the triangle itself.
    WholeTriangle,
    /// Both adjacent angles above 60° and wedged placements disallowed.
    None,
}

/// Largest ET on one side: size, placement and actual coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideETResult {
    pub side: SideLabel,
    pub mode: PlacementMode,
    pub metrics: Option<ETMetrics>,
    /// ET area / triangle area.
    pub ratio: Option<f64>,
    /// Base endpoints (in the side's direction) then apex.
    pub vertices: Option<[Point; 3]>,
    /// True iff all three ET vertices lie on the triangle's boundary.
    pub inscribed: bool,
}

impl SideETResult {
    fn absent(side: SideLabel) -> Self {
        SideETResult {
            side,
            mode: PlacementMode::None,
            metrics: None,
            ratio: None,
            vertices: None,
            inscribed: false,
        }
    }

    pub fn area(&self) -> Option<f64> {
        self.metrics.map(|m| m.area)
    }
}

/// Per-side results plus the argmax/argmin sides by ET area.
///
/// Ties within the tie tolerance are reported as sets; sides with no
/// placement (`mode == None`) are excluded from both sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleETReport {
    pub sides: [SideETResult; 3],
    pub max_sides: Vec<SideLabel>,
    pub min_sides: Vec<SideLabel>,
}

impl TriangleETReport {
    pub fn result(&self, side: SideLabel) -> &SideETResult {
        &self.sides[side.index()]
    }

    pub fn max_area(&self) -> Option<f64> {
        self.max_sides.first().and_then(|&s| self.result(s).area())
    }

    pub fn min_area(&self) -> Option<f64> {
        self.min_sides.first().and_then(|&s| self.result(s).area())
    }

    /// All three placements exist and tie in area (equilateral input, or
    /// the 80-80-20 triangle in wedged mode).
    pub fn all_coincide(&self) -> bool {
        self.max_sides.len() == 3 && self.min_sides.len() == 3
    }
}

/// Computes the largest ET whose base lies on the given side.
///
/// `allow_wedged` admits the full-side wedged placement when both adjacent
/// angles exceed 60°; otherwise that side reports `PlacementMode::None`.
pub fn largest_et_on_side(
    tri: &TriangleSpec,
    side: SideLabel,
    allow_wedged: bool,
) -> Result<SideETResult> {
    let (p, q) = tri.side_endpoints(side);
    let opposite = tri.opposite_vertex(side);
    let (th_p, th_q) = tri.adjacent_angles(side);
    let len = tri.side_length(side);
    let dir = (q - p).normalized();
    let interior = dir.perp(); // CCW sides keep the interior on the left

    let t1 = th_p.min(th_q);
    let t2 = th_p.max(th_q);

    let (mode, s, verts) = if tri.is_equilateral() {
        (PlacementMode::WholeTriangle, len, [p, q, opposite])
    } else if t1 > 60.0 + ANGLE_EQ_TOL_DEG {
        if !allow_wedged {
            return Ok(SideETResult::absent(side));
        }
        let apex = p.midpoint(q) + interior * (len * SQRT3 / 2.0);
        (PlacementMode::Wedged, len, [p, q, apex])
    } else if t2 < 60.0 - ANGLE_EQ_TOL_DEG {
        // altitude from coordinates, not from angle formulas
        let h = 2.0 * tri.area() / len;
        let s = 2.0 * h * SQRT3 / 3.0;
        let foot = p + dir * (opposite - p).dot(dir);
        let b1 = foot - dir * (s / 2.0);
        let b2 = foot + dir * (s / 2.0);
        (PlacementMode::ApexAtOppositeVertex, s, [b1, b2, opposite])
    } else {
        // shared vertex at the endpoint with the larger adjacent angle
        let (shared, th_small, shared_is_start) =
            if th_q >= th_p { (q, th_p, false) } else { (p, th_q, true) };
        let (i_start, i_end) = match side {
            SideLabel::A => (1, 2),
            SideLabel::B => (2, 0),
            SideLabel::C => (0, 1),
        };
        let shared_label = SideLabel::from_index(if shared_is_start { i_start } else { i_end });
        let h_shared = 2.0 * tri.area() / tri.side_length(shared_label);
        let s = h_shared / sin_deg(60.0 + th_small);
        let along = if shared_is_start { dir } else { dir * -1.0 };
        let base_end = shared + along * s;
        let cand_a = shared + along.rotated_deg(60.0) * s;
        let cand_b = shared + along.rotated_deg(-60.0) * s;
        let apex = if (cand_a - shared).dot(interior) >= (cand_b - shared).dot(interior) {
            cand_a
        } else {
            cand_b
        };
        let verts = if shared_is_start {
            [shared, base_end, apex]
        } else {
            [base_end, shared, apex]
        };
        (PlacementMode::SharedVertex, s, verts)
    };

    let metrics = ETMetrics::for_side(s);
    Ok(SideETResult {
        side,
        mode,
        ratio: Some(metrics.area / tri.area()),
        metrics: Some(metrics),
        vertices: Some(verts),
        inscribed: !matches!(mode, PlacementMode::Wedged | PlacementMode::None),
    })
}

/// Runs [`largest_et_on_side`] on all three sides and groups the argmax and
/// argmin sides, with ties within `tie_tol` (relative area) reported as sets.
pub fn analyze_triangle(
    tri: &TriangleSpec,
    allow_wedged: bool,
    tie_tol: f64,
) -> Result<TriangleETReport> {
    let sides = [
        largest_et_on_side(tri, SideLabel::A, allow_wedged)?,
        largest_et_on_side(tri, SideLabel::B, allow_wedged)?,
        largest_et_on_side(tri, SideLabel::C, allow_wedged)?,
    ];
    let present: Vec<(SideLabel, f64)> = sides
        .iter()
        .filter_map(|r| r.area().map(|a| (r.side, a)))
        .collect();
    let mut max_sides = Vec::new();
    let mut min_sides = Vec::new();
    if !present.is_empty() {
        let best = present.iter().map(|&(_, a)| a).fold(f64::MIN, f64::max);
        let worst = present.iter().map(|&(_, a)| a).fold(f64::MAX, f64::min);
        for &(label, area) in &present {
            if (best - area) <= tie_tol * best {
                max_sides.push(label);
            }
            if (area - worst) <= tie_tol * worst {
                min_sides.push(label);
            }
        }
    }
    Ok(TriangleETReport {
        sides,
        max_sides,
        min_sides,
    })
}
