//! Finite-field arithmetic and linear algebra over GF(p) and GF(p^e).

pub mod field;
pub mod linalg;
pub mod semilinear;
pub mod subspace;
pub mod tensor;

pub use field::{Elem, Field, FieldRef};
pub use linalg::Matrix;
pub use semilinear::SemilinearMap;
pub use subspace::Subspace;
