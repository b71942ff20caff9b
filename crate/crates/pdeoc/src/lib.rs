//! Direct transcription and solution of optimal boundary-control problems
//! governed by 1-D parabolic PDEs.
//!
//! The pipeline discretizes in time with multi-interval flipped
//! Legendre-Gauss-Radau (fLGR) collocation and in space with Galerkin P-1/P-2
//! finite elements (or, alternatively, second-order finite differences),
//! producing a sparse nonlinear program with analytic derivatives that a
//! bundled interior-point solver drives to a KKT point.
//!
//! Layering, bottom up:
//! - [`quadrature`] / [`interp`]: Radau rules, barycentric Lagrange
//!   interpolation and differentiation matrices (generic over the scalar).
//! - [`mesh`]: temporal multi-interval mesh with affine maps, spatial element
//!   grid, global block temporal differentiation matrix.
//! - [`fem`]: P-1/P-2 basis evaluation and mass/convection/stiffness assembly
//!   by element-local Radau quadrature.
//! - [`transcription`] / [`derivatives`]: decision-vector layout, discrete
//!   dynamics/objective, analytic gradient and sparse Jacobian with a
//!   precomputed pattern, finite-difference verification.
//! - [`fdm`]: method-of-lines finite-difference spatial backend.
//! - [`nlp`] / [`ipm`]: solver-backend contract and the reference
//!   interior-point solver.
//! - [`problems`]: the Burgers' tracking and (constrained) nonlinear heat
//!   benchmarks.
//! - [`study`]: temporal/spatial self-convergence studies with slope fitting.

pub mod derivatives;
pub mod fdm;
pub mod fem;
pub mod interp;
pub mod ipm;
pub mod mesh;
pub mod nlp;
pub mod problems;
pub mod quadrature;
pub mod scalar;
pub mod study;
pub mod transcription;

/// Errors surfaced by the discretization and solver layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("root finding for the Radau rule with {n} points did not converge: {detail}")]
    RootFinding { n: usize, detail: String },
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("evaluation point {x} outside the domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("{context} produced a non-finite value")]
    NonFinite { context: &'static str },
    #[error("linear solver failure: {0}")]
    Linear(String),
}

pub type Result<T> = std::result::Result<T, Error>;

// Concrete double-precision aliases for the scalar-generic layers.
pub type RadauRule64 = quadrature::RadauRule<f64>;
pub type DiffMatrix64 = interp::DiffMatrix<f64>;
pub type TemporalMesh64 = mesh::TemporalMesh<f64>;
pub type SpatialGrid64 = mesh::SpatialGrid<f64>;
pub type DiscreteOperators64 = fem::DiscreteOperators<f64>;

pub use nlp::{NlpProblem, SolveOptions, SolveReport, SolveStatus};
pub use transcription::{DecisionLayout, ProblemDefinition, TranscribedProblem};
