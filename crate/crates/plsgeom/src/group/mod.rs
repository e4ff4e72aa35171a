//! Matrix/semilinear groups as permutation groups: orbits, stabilizer
//! chains, block systems, line orbits, and rank computations.

pub mod action;
pub mod blocks;
pub mod lines;
pub mod orbit;
pub mod perm;
pub mod rank;
pub mod schreier;

pub use action::{GroupSpec, VSpace};
pub use blocks::{BlockContext, BlockReport};
pub use orbit::{orbits_all, Orbit};
pub use perm::{Perm, PermGroup, Point};
