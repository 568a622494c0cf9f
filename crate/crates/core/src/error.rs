use alloc::string::String;

/// Errors reported by the solvers and problem constructors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("problem is infeasible")]
    Infeasible,

    #[error("objective {0} has no gradient surrogate")]
    MissingSurrogate(usize),

    #[error("zero surrogate vector")]
    ZeroSurrogate,

    #[error("initial point is outside the feasible region")]
    InfeasibleStart,

    #[error("polygon is not star-shaped")]
    NotStarShaped,

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("point lies outside the unit ball")]
    OutsideKleinModel,

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("characteristic root is degenerate (lambda <= 1)")]
    DegenerateRoot,

    #[error("every weight vector makes some case unbounded")]
    AllCasesInfinite,

    #[error("evaluation point exceeds the cap of {0}")]
    CapExceeded(i64),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
