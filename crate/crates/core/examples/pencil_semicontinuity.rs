//! The special member of a pencil has a termwise larger tail than the
//! general member.

use hstrata::experiments::{pencil_limit, random_space, sample_hilbert_burch, stream_rng};
use hstrata::linalg::Modulus;
use hstrata::Partition;

fn main() -> hstrata::Result<()> {
    let m = Modulus::from_env()?;
    let special = sample_hilbert_burch(6, 3, &Partition::new(vec![4, 2])?, 0, 3, m)?;
    let direction = random_space(m, 6, 3, &mut stream_rng(4, 0));
    let report = pencil_limit(&special.space, &direction, 5, 5)?;
    println!("special {}, general {}, holds {}", report.special, report.generic, report.holds());
    Ok(())
}
