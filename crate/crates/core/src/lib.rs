//! Classification of nilpotent adjoint orbits of the classical real Lie
//! algebras: for each orbit datum the library decides whether the orbit is
//! stable under negation (`O = -O`) and derives the resulting Gibbs-state
//! verdict, with an exact matrix-level engine serving as an independent
//! cross-check of the combinatorial criteria.

pub mod algebra;
pub mod engine;
pub mod exact;
pub mod gibbs;
pub mod orbits;
pub mod report;
pub mod sl2rep;

pub use algebra::{
    AlgebraDescriptor, GibbsVerdict, MultiplicityDatum, MultiplicityEntry, NegationReason,
    NegationVerdict,
};
pub use exact::{Matrix, Scalar};
