//! Exact scalars, dense matrices, and dual numbers.

pub mod dual;
pub mod echelon;
pub mod field;
pub mod matrix;

pub use dual::{rank_with_duals, Dual};
pub use echelon::EchelonBasis;
pub use field::{Field, FieldKind, Fp, Modulus, Rational, Ring, DEFAULT_PRIME};
pub use matrix::{kernel_basis, rank, rref, Matrix, Rref};
