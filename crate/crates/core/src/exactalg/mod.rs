//! Exact rational linear algebra and polynomial matrix calculus.
//!
//! Everything here is exact: there is no floating point on any path that
//! decides a rank, a kernel or an eigenvalue.

mod closure;
mod eigen;
mod matrix;
mod poly;
mod polymatrix;
mod rat;
mod ratfn;

pub use closure::{algebra_closure_dim, invariant_closure, invariant_closure_sparse};
pub use eigen::{
    local_minimal_polynomial, minimal_polynomial, poly_apply, rational_roots, rational_spectrum,
    simultaneous_eigenbasis, JointEigen,
};
pub use matrix::{RatMatrix, SparseMatrix, Subspace};
pub use poly::Poly;
pub use polymatrix::{PolyMatrix, RatFnMatrix};
pub use rat::{ParseRatError, Rat};
pub use ratfn::RatFn;

/// Errors raised by the exact algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("rational function is identically zero")]
    IdenticallyZero,
    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("family is not simultaneously diagonalizable over Q: {0}")]
    NotSimultaneouslyDiagonalizable(String),
}

/// Rank of a matrix.
pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

/// Basis of the right kernel of a matrix.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    m.kernel()
}

/// Basis of the column space of a matrix.
pub fn image_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    m.image()
}

/// Leading Laurent coefficient of a rational-function matrix at a point.
pub fn laurent_leading(m: &RatFnMatrix, point: &Rat) -> Result<(i64, RatMatrix), AlgebraError> {
    m.laurent_leading(point)
}
