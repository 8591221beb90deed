use thiserror::Error;

/// Errors produced by triangle construction, solvers and the atlas.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside its admissible range (non-positive length,
    /// polar angle outside the curve domain, bad window, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested triangle has no positive area or violates the angle sum.
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    /// The angles satisfy none of the wedged-placement classification
    /// clauses. Only reachable on the measure-zero gaps between clause
    /// preconditions; callers should fall back to solver truth.
    #[error("angles ({alpha}, {beta}, {gamma}) match no classification clause")]
    Unclassified { alpha: f64, beta: f64, gamma: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
