//! Builds graded ideals through a special space to witness that it lies in
//! the closure of more general strata.

use hstrata::experiments::{certify_closure_membership, sample_hilbert_burch};
use hstrata::linalg::Modulus;
use hstrata::strata::strata;

fn main() -> hstrata::Result<()> {
    let m = Modulus::from_env()?;
    let all = strata(6, 3);
    let special = all.iter().find(|s| s.tail.values() == [4, 2, 1]).expect("stratum exists");
    let v = sample_hilbert_burch(6, 3, &special.relation_degrees, special.c, 2, m)?;
    for target in &all {
        let cert = certify_closure_membership(&v.space, &target.tail, 9, 10)?;
        println!(
            "{} -> {}: {:?}, generators added {:?}",
            special.tail, target.tail, cert.outcome, cert.added
        );
    }
    Ok(())
}
