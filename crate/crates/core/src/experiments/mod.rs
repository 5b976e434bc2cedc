//! Randomized checks over `F_p`: sampling strata through relation matrices,
//! Jacobian ranks, specialization along pencils, and closure certificates.

mod certify;
mod jacobian;
mod mu_family;
mod pencil;
mod rng;
mod sample;

pub use certify::{certify_closure_membership, CertificationOutcome, ClosureCertificate};
pub use jacobian::jacobian_rank_dim;
pub use mu_family::{mu_family_closure_is_a_chain, mu_family_dims, MuFamilyRow};
pub use pencil::{pencil_limit, PencilReport};
pub use rng::{derive_seed, random_element, random_form, random_space, random_split_form, stream_rng};
pub use sample::{expected_tail, sample_hilbert_burch, HBSample, MAX_RESAMPLES};
