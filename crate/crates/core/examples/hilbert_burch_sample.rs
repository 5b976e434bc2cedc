//! Random spaces with prescribed relation degrees, checked against the
//! relation module computed from scratch.

use hstrata::experiments::sample_hilbert_burch;
use hstrata::invariants::{degrees_from_syzygy_oracle, hilbert_tail};
use hstrata::linalg::Modulus;
use hstrata::Partition;

fn main() -> hstrata::Result<()> {
    let m = Modulus::from_env()?;
    for (degrees, c) in [(vec![3, 3], 0), (vec![4, 2], 0), (vec![5, 1], 0), (vec![2, 2], 2)] {
        let degrees = Partition::new(degrees)?;
        let s = sample_hilbert_burch(6, 3, &degrees, c, 1, m)?;
        println!(
            "D = {degrees}, c = {c}: tail {}, relation module degrees {}, {} draw(s)",
            hilbert_tail(&s.space)?,
            degrees_from_syzygy_oracle(&s.space)?,
            s.attempts
        );
    }
    Ok(())
}
