//! Barycentric Lagrange interpolation and differentiation matrices.
//!
//! The temporal discretization represents the state on each mesh interval by
//! the Lagrange interpolant through one noncollocated initial point plus the
//! interval's Radau collocation points; its derivative at the collocation
//! points is a dense differentiation matrix. Barycentric form keeps both
//! stable for clustered nodes.

use crate::scalar::Real;
use crate::{Error, Result};

/// Differentiation matrix for a Lagrange basis: entry (i, n) is the
/// r-derivative of the n-th basis polynomial at the i-th evaluation point.
/// Evaluation points must be a subset of the support points.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffMatrix<T> {
    pub support_points: Vec<T>,
    pub eval_points: Vec<T>,
    /// Row-major, `eval_points.len()` x `support_points.len()`.
    pub entries: Vec<T>,
}

impl<T: Real> DiffMatrix<T> {
    pub fn rows(&self) -> usize {
        self.eval_points.len()
    }

    pub fn cols(&self) -> usize {
        self.support_points.len()
    }

    pub fn at(&self, i: usize, n: usize) -> T {
        self.entries[i * self.cols() + n]
    }

    /// Applies the matrix to support-point samples.
    pub fn apply(&self, values: &[T]) -> Vec<T> {
        assert_eq!(values.len(), self.cols());
        (0..self.rows())
            .map(|i| {
                values
                    .iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (n, &v)| acc + self.at(i, n) * v)
            })
            .collect()
    }
}

/// Barycentric weights lambda_n = 1 / prod_{q != n} (r_n - r_q).
pub fn barycentric_weights<T: Real>(support: &[T]) -> Result<Vec<T>> {
    let m = support.len();
    let mut lambda = vec![T::one(); m];
    for n in 0..m {
        for q in 0..m {
            if q != n {
                let diff = support[n] - support[q];
                if diff == T::zero() {
                    return Err(Error::InvalidMesh(format!(
                        "duplicate support points at indices {q} and {n}"
                    )));
                }
                lambda[n] = lambda[n] / diff;
            }
        }
    }
    Ok(lambda)
}

/// Evaluates the unique interpolant through (support, values) at `query` in
/// barycentric form; exact (bitwise) at the support points themselves.
pub fn lagrange_interpolate<T: Real>(support: &[T], values: &[T], query: T) -> T {
    assert_eq!(support.len(), values.len());
    for (n, &r) in support.iter().enumerate() {
        if query == r {
            return values[n];
        }
    }
    let lambda = barycentric_weights(support).expect("distinct support points");
    let mut num = T::zero();
    let mut den = T::zero();
    for n in 0..support.len() {
        let c = lambda[n] / (query - support[n]);
        num = num + c * values[n];
        den = den + c;
    }
    num / den
}

/// Differentiation matrix via barycentric weights. For an evaluation point
/// that equals support point p, D_{p n} = (lambda_n / lambda_p) / (r_p - r_n)
/// for n != p and the diagonal closes each row to zero sum.
pub fn lagrange_diff_matrix<T: Real>(support: &[T], eval: &[T]) -> Result<DiffMatrix<T>> {
    let m = support.len();
    let lambda = barycentric_weights(support)?;
    let mut entries = vec![T::zero(); eval.len() * m];
    for (i, &re) in eval.iter().enumerate() {
        let p = support.iter().position(|&r| r == re).ok_or_else(|| {
            Error::InvalidMesh(format!(
                "evaluation point {re} is not one of the support points"
            ))
        })?;
        let row = &mut entries[i * m..(i + 1) * m];
        let mut diag = T::zero();
        for n in 0..m {
            if n != p {
                let d = (lambda[n] / lambda[p]) / (support[p] - support[n]);
                row[n] = d;
                diag = diag - d;
            }
        }
        row[p] = diag;
    }
    Ok(DiffMatrix {
        support_points: support.to_vec(),
        eval_points: eval.to_vec(),
        entries,
    })
}
