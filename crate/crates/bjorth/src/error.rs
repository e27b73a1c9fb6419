use thiserror::Error;

/// Everything that can go wrong inside the library proper.
///
/// Input parsing has its own error type in [`crate::io`]; this enum covers
/// the numerical API. Degenerate inputs (zero vectors, zero matrices) are
/// mostly *not* errors: the orthogonality checks resolve them by convention
/// and flag the certificate instead. The exceptions are operations whose
/// result would be meaningless, such as the top singular subspace of the
/// zero matrix.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {a_rows}x{a_cols} vs {b_rows}x{b_cols}")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    BadMatrixData { rows: usize, cols: usize, got: usize },

    #[error("p-norm exponent must be >= 1, got {0}")]
    InvalidExponent(f64),

    #[error("custom norm '{name}' failed validation: {reason}")]
    NormValidation { name: String, reason: String },

    #[error("{0} must be nonzero here")]
    ZeroInput(&'static str),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("grid has no points")]
    EmptyGrid,

    #[error("grid edge ({0}, {1}) is out of bounds")]
    BadEdge(usize, usize),

    #[error("antipode map is not an involution at index {0}")]
    BadAntipodeMap(usize),

    #[error("sample count mismatch: {points} grid points but {values} values")]
    SampleCountMismatch { points: usize, values: usize },

    #[error("functions are sampled on different grids")]
    GridMismatch,

    #[error("attainment set splits into {components} components; the single-witness form needs a connected one")]
    DisconnectedAttainment { components: usize },

    #[error("component is not connected under the grid adjacency")]
    ComponentNotConnected,

    #[error("component index {0} is outside the attainment set")]
    ComponentOutsideAttainment(usize),

    #[error("grid has no antipode map, cannot identify antipodes")]
    NoAntipodeMap,

    #[error("norm '{0}' is not supported by this check")]
    UnsupportedNorm(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("input contains a non-finite value")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
