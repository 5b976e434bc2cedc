//! Per-space invariants: Hilbert tail, τ, λ, relation degrees, μ-basis, nose.

mod mu;
mod nose;
mod tail;

pub use mu::{degrees_from_syzygy_oracle, mu_basis, signed_minors, MuBasis};
pub use nose::{ancestor_dim_from_scroll, nose, scroll_from_ancestor_dims, Nose};
pub use tail::{hilbert_tail, lambda_of, relation_degrees, tau, HilbertTail};
