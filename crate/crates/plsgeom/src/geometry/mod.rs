//! Partial linear spaces: axiom checking, invariants, products,
//! dependence/affine tests, and automorphism verification.

pub mod affine;
pub mod iso;
pub mod ops;
pub mod pls;

pub use pls::{PartialLinearSpace, PlsReport};
