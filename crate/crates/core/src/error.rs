//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while loading graphs, assembling problems, or
/// running a solver. Solver *non-convergence within the cycle budget* is not an
/// error — it is reported through [`crate::report::SolverReport::converged`] so
/// callers can still inspect the partial result.
#[derive(Debug, Error)]
#[allow(missing_docs)] // the variant messages describe every payload field
pub enum Error {
    /// An edge-list line that is neither a comment, a header, nor `src dst`.
    #[error("malformed edge list line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    /// A node id too large for the storage format.
    #[error("node id overflow on line {line}: {id}")]
    IdOverflow { line: usize, id: u64 },

    /// No edges and no dimension header: the graph is undefined.
    #[error("empty edge list input")]
    EmptyInput,

    /// Graph completion needs at least two nodes to draw non-self links.
    #[error("graph completion requires n >= 2, got n = {n}")]
    GraphTooSmall { n: usize },

    /// A node index outside `0..n`.
    #[error("node index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// Matrix construction saw the same (row, col) position twice.
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },

    /// Matrix entries must be non-negative.
    #[error("negative value {value} at ({row}, {col})")]
    NegativeValue { row: usize, col: usize, value: f64 },

    /// An operation that requires a column-stochastic matrix got one that is not.
    #[error("column {col} sums to {sum}, expected 1 within tolerance")]
    NotColumnStochastic { col: usize, sum: f64 },

    /// A damping factor outside (0, 1].
    #[error("damping factor d = {d} outside (0, 1]")]
    DampingOutOfRange { d: f64 },

    /// The classic diffusion iteration has no source term at d = 1.
    #[error("DI is undefined at d = 1 (source term (1-d)e vanishes)")]
    DiUndefined,

    /// d = 1 diffusion needs every column non-empty (complete the graph first).
    #[error("{count} empty column(s): complete the graph before solving at d = 1")]
    EmptyColumns { count: usize },

    /// σ(H + e) collapsed to ~0 so the result cannot be normalized.
    #[error("cannot normalize result: sigma(H + e) = {sum}")]
    NormalizationFailed { sum: f64 },

    /// A parameter outside its documented domain.
    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    /// Dense oracle guard: direct methods are capped at small dimensions.
    #[error("dense oracle dimension {n} exceeds the cap {max}")]
    DimensionTooLarge { n: usize, max: usize },

    /// Gaussian elimination hit a vanishing pivot.
    #[error("matrix is singular to working precision (pivot {pivot} at step {step})")]
    SingularMatrix { step: usize, pivot: f64 },

    /// A dense oracle iteration ran out of budget; oracle results are all or
    /// nothing, unlike solver reports.
    #[error("oracle did not converge: delta {delta} after {iterations} iterations")]
    OracleDidNotConverge { delta: f64, iterations: u64 },

    /// The scaled matrix P' = P/rho is diverging: rho was underestimated.
    #[error("fluid norm grew from {initial} to {current}: rho is too small")]
    FluidDiverged { initial: f64, current: f64 },

    /// The spectral-radius estimate did not stabilize.
    #[error("rho estimate did not stabilize: residual {residual} after {iterations} iterations")]
    RhoEstimateUnreliable { residual: f64, iterations: u64 },

    /// Two converged methods in one bench batch disagree beyond their tolerances.
    #[error("cross-check failed at d = {d}: |{method_a} - {method_b}| = {distance} > {allowed}")]
    CrossCheckFailed {
        method_a: &'static str,
        method_b: &'static str,
        d: f64,
        distance: f64,
        allowed: f64,
    },

    /// Underlying I/O failure while reading or writing files.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
