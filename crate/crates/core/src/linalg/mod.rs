//! Exact dense linear algebra over ℚ.

mod echelon;
mod matrix;
mod poly;
mod subspace;
mod vandermonde;

pub use echelon::{det, inverse, kernel, rank, rref, rref_decompose, Decomposition, Echelon};
pub use matrix::Matrix;
pub use poly::{char_poly, power_sums_of, MonicPoly};
pub use subspace::{subspace_compare, Subspace, SubspaceRelation};
pub use vandermonde::{vandermonde, vandermonde_apply, vandermonde_inverse, vandermonde_solve};

pub(crate) use vandermonde::check_distinct;
