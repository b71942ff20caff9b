//! Scalar abstraction for the numeric kernels.
//!
//! The quadrature, interpolation, mesh and finite-element layers are generic
//! over [`Real`] so they work in `f32` or `f64`; the transcription and solver
//! layers fix `f64`. Double-precision aliases for the generic types live at
//! the crate root.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar for the discretization kernels.
pub trait Real: Float + FromPrimitive + std::fmt::Debug + std::fmt::Display + 'static {
    /// Converts an `f64` constant; panics only if the target type cannot
    /// represent any value near it (never the case for `f32`/`f64`).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("scalar conversion")
    }

    fn usize(n: usize) -> Self {
        Self::from_usize(n).expect("scalar conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}
