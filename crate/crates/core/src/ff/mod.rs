//! Finite fields, dense linear algebra and polynomial arithmetic.

pub mod field;
pub mod matrix;
pub mod mpoly;
pub mod polymatrix;
pub mod upoly;

pub use field::{Elem, Field};
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use polymatrix::PolyMatrix;
pub use upoly::UPoly;
