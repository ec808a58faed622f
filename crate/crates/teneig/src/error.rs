//! Crate-wide error type.

/// Everything that can go wrong across the tensor, eigensolver, iteration,
/// and dataset layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-contract input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Mismatched orders, dimensions, or vector lengths.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Operation outside the supported parameter range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The B-form evaluated to a non-positive value, so B is not positive
    /// definite at the current point and the generalized Rayleigh quotient
    /// is undefined there.
    #[error("B-form value {value:.6e} is not positive; B is not positive definite at this point")]
    IndefiniteForm { value: f64 },

    /// The shifted gradient vanished, leaving the power iteration with no
    /// direction to move in.
    #[error("iteration breakdown: {0}")]
    Breakdown(String),

    /// A numerical process failed to produce a usable result.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Text-format parse failure, with the 1-based line it occurred on.
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Request for a built-in dataset that does not exist.
    #[error("unknown dataset `{0}` (expected kore02, heig, deig, or random)")]
    UnknownDataset(String),
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad
    /// arguments or I/O. The CLI maps these to a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::IndefiniteForm { .. } | Error::Breakdown(_) | Error::Numerical(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
