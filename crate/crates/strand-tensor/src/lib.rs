//! Numerical semantics for diagrams: matrices and tensors over a choice of
//! scalar rig, plus the functor targets that evaluate syntax into them.

pub mod eval;
pub mod matrix;
pub mod rig;
pub mod tensor;

pub use eval::{MatCat, TensorCat};
pub use matrix::Matrix;
pub use rig::Rig;
pub use tensor::{product, Tensor};
