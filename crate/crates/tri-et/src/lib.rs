//! Largest equilateral triangles (ETs) on the sides of a triangle.
//!
//! For any triangle this crate computes, per side, the largest ET whose
//! base lies on that side — inscribed, or *wedged* when both adjacent
//! angles exceed 60° — classifies which sides carry the maximum and
//! minimum ET via angle-condition rules, locates an apex point in the
//! region atlas bounded by two cubic curves, and cross-checks every
//! closed form against a brute-force placement oracle.

pub mod atlas;
pub mod classifier;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod reference;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{
    et_metrics_from_height, et_metrics_from_side, AngleTriple, ETMetrics, Point, SideLabel,
    TriangleSpec,
};
pub use solver::{
    analyze_triangle, largest_et_on_side, PlacementMode, SideETResult, TriangleETReport,
    DEFAULT_TIE_TOL,
};
