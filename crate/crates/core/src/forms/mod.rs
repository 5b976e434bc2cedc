//! Binary forms, subspaces of `R_j`, colon spaces and the ancestor ideal.

mod ancestor;
mod form;
pub mod roots;
mod space;
pub mod univariate;

pub use ancestor::{ancestor_ideal, GradedIdealSlice};
pub use form::BinaryForm;
pub use space::FormSpace;
