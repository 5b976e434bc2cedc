//! Exact computations with spaces of binary forms and their Hilbert-function
//! strata in the Grassmannian `Grass(R_j, d)`.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod forms;
pub mod invariants;
pub mod linalg;
pub mod partition;
pub mod strata;

pub use error::{Error, Result};
pub use partition::Partition;
