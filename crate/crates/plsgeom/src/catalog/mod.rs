//! Validated library of the specific groups and presets.

pub mod derive;
pub mod entries;
pub mod extraspecial;
pub mod presets;
pub mod quaternion;
pub mod regulars;
pub mod suzuki;
