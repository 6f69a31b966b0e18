//! Exact matrix-level engine: membership, Jacobson-Morozov triple
//! completion, isotypic datum extraction, model synthesis, explicit
//! negation conjugators, and the connected-component decision. It serves
//! as the independent oracle for the combinatorial `orbits` layer.
//!
//! Matrix-level families: `sl(n,R)`, `so(p,q,R)`, `sp(2n,R)`, `su(p,q)`.
//! The quaternionic families and the complex case are classified purely
//! combinatorially.

mod ambient;
mod isotypic;
mod jordan;
mod negation;
mod triple;

pub use ambient::{AmbientSpace, FormKind};
pub use isotypic::{build_model, extract_datum, isotypic_decomposition, IsotypicBlock, IsotypicData};
pub use jordan::{gl_triple, jordan_chains, JordanData};
pub use negation::{
    build_negation_conjugator, centralizer_components_matrix, decide_negation_matrix,
    VerdictBundle,
};
pub use triple::{complete_standard_triple, complete_standard_triple_seeded, StandardTriple};

use crate::algebra::DatumError;
use crate::exact::ExactError;
use crate::sl2rep::Sl2Error;

#[derive(Debug, Clone, thiserror::Error)]
pub enum EngineError {
    #[error("family {0} has no matrix-level engine")]
    UnsupportedFamily(String),
    #[error("expected a {expected}x{expected} matrix, got {}x{}", got.0, got.1)]
    SizeMismatch { expected: usize, got: (usize, usize) },
    #[error("bad ambient form: {0}")]
    BadForm(String),
    #[error("x is not in the algebra")]
    NotInAlgebra,
    #[error("x is not nilpotent")]
    NotNilpotent,
    #[error("x must be nonzero")]
    ZeroElement,
    #[error("invalid standard triple: {0}")]
    InvalidTriple(String),
    #[error("no isometric conjugator exists: odd weight r={r} is not split")]
    NotConjugateInFullGroup { r: u32 },
    #[error("no conjugator with rational entries at odd weight r={r}")]
    NoRationalWitness { r: u32 },
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
    #[error("internal invariant failure: {0}")]
    Internal(String),
}
