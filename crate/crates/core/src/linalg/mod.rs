//! Exact linear algebra over the rationals: scalars, coordinate vectors,
//! matrices, bilinear structure constants and dense multilinear tensors.

pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod vector;

pub use matrix::{LinearMap, Solution};
pub use scalar::{format_scalar, int, one, parse_scalar, pow, ratio, zero, Scalar};
pub use tensor::{mixed_tuples, tuples, BilinearMap, MultiTensor};
pub use vector::Vector;
