//! Construction, verification, and cataloging of the finite proper partial
//! linear spaces with rank-3 affine automorphism groups, together with the
//! group-theoretic machinery (orbits, stabilizer chains, block systems) and
//! the algebraic machinery (nearfields, compatible triples, spin modules)
//! behind them.

pub mod algebra;
pub mod catalog;
pub mod clifford;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod group;
pub mod cli;

pub use error::Error;
