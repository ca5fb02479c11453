//! Exact linear algebra over ℚ: scalars, graded spaces, dense elimination
//! and sparse action matrices.

mod dense;
mod scalar;
mod sparse;
mod superspace;

pub use dense::{
    dot, kernel_basis, pivot_columns, quotient_dim, rank, span_rank, IncrementalSpan, RationalMatrix,
    SpanCoordinates,
};
pub use scalar::{frac, int, one, parse_scalar, scalar_string, sign, zero, Scalar};
pub use sparse::{collect_sparse, SparseMatrix, SparseVec};
pub use superspace::{Parity, SuperVectorSpace};
