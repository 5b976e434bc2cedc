//! Dimension of the family of triples with given relation degrees, as the
//! rank of a Jacobian computed with dual numbers.

use hstrata::experiments::jacobian_rank_dim;
use hstrata::linalg::Modulus;
use hstrata::strata::{cod_in_g, strata};

fn main() -> hstrata::Result<()> {
    let m = Modulus::from_env()?;
    for (j, d) in [(6, 3), (8, 3), (9, 4)] {
        for s in strata(j, d).into_iter().filter(|s| s.c == 0) {
            let rank = jacobian_rank_dim(j, d, &s.relation_degrees, 1, m)?;
            let predicted = d * (j + 1) - cod_in_g(&s.relation_degrees, 0, d);
            println!("({j},{d}) D = {}: rank {rank}, predicted {predicted}", s.relation_degrees);
        }
    }
    Ok(())
}
