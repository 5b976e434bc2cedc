//! Enumeration of the Hilbert-function and scroll strata of `Grass(R_j, d)`,
//! their dimensions, and the closure order.

mod descriptor;
mod formulas;
mod nose;
mod poset;

pub use descriptor::{admissible_tails, admissible_tails_by_predicate, strata, StratumDescriptor};
pub use formulas::{
    cod_in_g, cod_tau, dim_gh, dim_gh_full, dim_gh_terms, ell_partition, tail_from_lambda,
};
pub use nose::{nose_strata, NoseStratumDescriptor};
pub use poset::StrataPoset;
