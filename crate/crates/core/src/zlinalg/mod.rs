//! Exact integer linear algebra: formal sums over a basis, Hermite and Smith
//! normal forms, integer kernels and solving, and submodules of `(ℤ/e)ⁿ`.

pub mod formal_sum;
pub mod matrix;
pub mod modular;
pub mod normal_form;

pub use formal_sum::{Basis, FormalSum};
pub use matrix::IntMatrix;
pub use modular::ModLattice;
pub use normal_form::{
    hermite_form, kernel_basis, lattice_basis, smith_form, solve, solve_with_hermite,
    subgroup_contains, subgroup_equal, FormKind, NormalForm,
};
