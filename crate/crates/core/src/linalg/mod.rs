//! Exact integer linear algebra.
//!
//! Matrices carry arbitrary-precision entries; nothing in here touches
//! floating point.

mod abelian;
mod hermite;
mod matrix;
mod modular;
mod smith;

pub use abelian::{homology_invariants, AbelianInvariants};
pub use hermite::{express_in_basis, hermite_normal_form, same_lattice};
pub use matrix::IntMatrix;
pub use modular::{gcd, mod_inverse, mod_mul, mod_pow, mult_order};
pub use smith::{integer_kernel, smith_decomposition, smith_normal_form, SmithDecomposition};
