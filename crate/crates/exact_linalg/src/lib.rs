//! Exact integer linear algebra: arbitrary-precision integers, dense matrices,
//! Smith and Hermite normal forms, kernels, saturation and small polynomial
//! utilities.

pub mod finab;
pub mod int;
pub mod matrix;
pub mod normal_form;
pub mod poly;

pub use finab::FinAbGroup;
pub use int::Int;
pub use matrix::IntMatrix;
pub use normal_form::{
    cokernel, column_hermite_basis, determinant, hermite_rows, image, invariant_factors, is_saturated,
    is_unimodular, kernel, kernel_image_cokernel, kernel_raw, rank, saturate, smith, smith_normal_form,
    solve, solve_one, unimodular_inverse, Hermite, Smith, Solver,
};
pub use poly::{charpoly, IntPoly};
