//! Integral closure, exact Stanley depth and decomposition transfer for
//! monomial ideals.

pub mod ass;
pub mod cli;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod monomial;
pub mod parse;
pub mod poset;
pub mod random;
pub mod simplex;
pub mod stanley;
pub mod transfer;

pub use error::{Error, Result};
pub use monomial::{edge_ideal, minimalize, Monomial, MonomialIdeal, MonomialPrime, VariableContext};
pub use stanley::{Module, StanleyDecomposition, StanleySpace};
