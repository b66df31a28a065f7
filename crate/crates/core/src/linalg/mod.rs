//! Exact integer linear algebra: characteristic polynomials, certified
//! real-root counting, exact inertia at integer shifts, integer root
//! extraction, and a Jacobi eigensolver used only as a fast floating-point
//! prefilter.

mod charpoly;
mod inertia;
mod jacobi;
mod matrix;
mod poly;
mod roots;

use thiserror::Error;

pub use charpoly::{charpoly, MAX_CHARPOLY_ORDER};
pub use inertia::{shifted_inertia, Inertia};
pub use jacobi::{jacobi_eigen, jacobi_eigenvalues, EigenDecomposition};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use roots::{count_roots, integer_root_multiset, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("order {0} exceeds the supported maximum of 24")]
    TooLarge(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
}
