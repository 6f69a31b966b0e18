//! Exact linear algebra over the rationals and Gaussian rationals.

mod linalg;
mod matrix;
mod scalar;

pub use linalg::{
    congruence_diagonalize, darboux_basis, det, inverse, kernel_basis, rank, rref,
    signature_hermitian, signature_symmetric, solve_linear, standard_symplectic,
};
pub use matrix::Matrix;
pub use scalar::Scalar;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not symmetric over the rationals")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is not antisymmetric over the rationals")]
    NotSkew,
    #[error("form is degenerate")]
    Degenerate,
    #[error("scalar is not real")]
    NotReal,
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}
