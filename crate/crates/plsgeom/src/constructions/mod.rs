//! Builders for the geometry families.

pub mod ag;
pub mod grid;
pub mod nearfield;
pub mod partitions;
pub mod seed_block;
pub mod tensor_geom;
pub mod triples;
