//! Tensor eigenpair computation for real symmetric tensors.
//!
//! The centerpiece is a shifted symmetric higher-order power method with an
//! adaptive shift: starting from a unit vector it iterates toward a
//! generalized eigenpair of a tensor pair (A, B), where B encodes which
//! notion of eigenpair is wanted (unit-sphere, elementwise-power,
//! matrix-weighted, or a caller-supplied tensor). Each converged pair is
//! classified as a constrained maximum, minimum, or saddle of the underlying
//! Rayleigh-like ratio by projecting its Hessian onto the tangent space.
//!
//! The supporting cast: [`symtensor`] stores dense symmetric tensors and
//! forms the repeated tensor-vector products, [`denselin`] supplies the small
//! dense eigensolver the shift logic needs, [`geap`] holds the iteration
//! itself, [`problems`] bundles the benchmark problems and the tensor text
//! format, and [`harness`] runs seeded multi-start experiments and renders
//! their result tables.

pub mod denselin;
pub mod error;
pub mod geap;
pub mod harness;
pub mod problems;
pub mod symtensor;
mod util;

pub use error::{Error, Result};
pub use geap::{
    BKind, Classification, EigenRecord, GeapConfig, IterationTrace, Orientation, ProblemSpec,
    ShiftMode,
};
pub use harness::{ExperimentConfig, OutputFormat, RunSummary, SummaryRow};
pub use symtensor::{SymMatrix, SymTensor};
