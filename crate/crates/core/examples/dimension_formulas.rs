//! Dimension of a stratum from its Hilbert function and from its relation
//! degrees, for the tail (6,4,3,2,1,0) in Grass(R_8, 3).

use hstrata::invariants::HilbertTail;
use hstrata::strata::{cod_in_g, cod_tau, dim_gh, dim_gh_terms, ell_partition, StratumDescriptor};

fn main() -> hstrata::Result<()> {
    let tail = HilbertTail::new(8, vec![6, 4, 3, 2, 1, 0])?;
    let terms: Vec<String> = dim_gh_terms(&tail).iter().map(|(a, b)| format!("{a}*{b}")).collect();
    println!("dim = {} + {} = {}", tail.c(), terms.join(" + "), dim_gh(&tail));

    let s = StratumDescriptor::from_tail(&tail)?;
    let cod = cod_in_g(&s.relation_degrees, s.c, s.d);
    let ambient = s.d * (s.j + 1 - s.d);
    println!("relation degrees {}: codim {cod}, ambient {ambient}", s.relation_degrees);
    println!(
        "codim = {} (tau locus) + {} (inside it)",
        cod_tau(s.j, s.d, s.tau)?,
        ell_partition(&s.lambda, s.c, s.tau)
    );
    Ok(())
}
