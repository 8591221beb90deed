//! Reference chart of twelve sample triangles with measured min/max
//! inscribed-ET area ratios, recorded from a dynamic-geometry session.
//!
//! The measured values carry roughly two to three digits of accuracy, so
//! comparisons against recomputed closed forms use [`MEASURED_RATIO_TOL`];
//! the closed forms themselves are held to far tighter tolerances elsewhere.

/// Tolerance for matching the measured chart ratios.
pub const MEASURED_RATIO_TOL: f64 = 0.01;

/// One chart row: canonical angles plus the measured min and max ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub angles: (f64, f64, f64),
    pub min_ratio: f64,
    pub max_ratio: f64,
}

/// The twelve chart triangles.
pub const REFERENCE_ROWS: [ReferenceRow; 12] = [
    ReferenceRow { angles: (70.0, 65.0, 45.0), min_ratio: 0.638, max_ratio: 0.677 },
    ReferenceRow { angles: (80.0, 65.0, 35.0), min_ratio: 0.461, max_ratio: 0.547 },
    ReferenceRow { angles: (90.0, 70.0, 20.0), min_ratio: 0.288, max_ratio: 0.327 },
    ReferenceRow { angles: (90.0, 80.0, 10.0), min_ratio: 0.168, max_ratio: 0.173 },
    ReferenceRow { angles: (75.0, 60.0, 45.0), min_ratio: 0.589, max_ratio: 0.732 },
    ReferenceRow { angles: (90.0, 60.0, 30.0), min_ratio: 0.378, max_ratio: 0.500 },
    ReferenceRow { angles: (100.0, 60.0, 20.0), min_ratio: 0.265, max_ratio: 0.348 },
    ReferenceRow { angles: (90.0, 50.0, 40.0), min_ratio: 0.437, max_ratio: 0.569 },
    ReferenceRow { angles: (110.0, 40.0, 30.0), min_ratio: 0.297, max_ratio: 0.395 },
    ReferenceRow { angles: (120.0, 35.0, 25.0), min_ratio: 0.243, max_ratio: 0.325 },
    ReferenceRow { angles: (130.0, 30.0, 20.0), min_ratio: 0.193, max_ratio: 0.258 },
    ReferenceRow { angles: (140.0, 25.0, 15.0), min_ratio: 0.150, max_ratio: 0.193 },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_well_formed() {
        for row in REFERENCE_ROWS {
            let (al, be, ga) = row.angles;
            assert!((al + be + ga - 180.0).abs() < 1e-12);
            assert!(al >= be && be >= ga);
            assert!(row.min_ratio <= row.max_ratio);
            assert!(row.min_ratio > 0.0 && row.max_ratio <= 1.0);
        }
    }
}
