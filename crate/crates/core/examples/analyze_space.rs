//! Invariants of `<x^6, x^5 y, y^6>` over the rationals.

use hstrata::forms::{BinaryForm, FormSpace};
use hstrata::invariants::{hilbert_tail, lambda_of, mu_basis, nose, relation_degrees, tau};
use hstrata::linalg::Rational;
use hstrata::strata::StratumDescriptor;

fn main() -> hstrata::Result<()> {
    let forms: Vec<BinaryForm<Rational>> =
        [0, 1, 6].iter().map(|&b| BinaryForm::monomial((), 6, b)).collect();
    let v = FormSpace::from_forms(6, &forms)?;

    let tail = hilbert_tail(&v)?;
    let (lambda, c) = lambda_of(&tail);
    println!("tail {tail}, tau {}, lambda {lambda}, c {c}", tau(&v));
    println!("relation degrees {}", relation_degrees(&lambda, v.dim())?);

    let mu = mu_basis(&v)?;
    for (u, col) in mu.columns().iter().enumerate() {
        let entries: Vec<String> = col.iter().map(ToString::to_string).collect();
        println!("relation {u} (degree {}): [{}]", mu.col_degrees().parts()[u], entries.join(", "));
    }
    for m in mu.signed_minors() {
        println!("minor {m}");
    }
    println!("minors regenerate V: {}", mu.regenerates(&v));

    let n = nose(&v);
    println!("nose {:?}, scroll {}", n.function, n.scroll);

    let s = StratumDescriptor::from_tail(&tail)?;
    println!("stratum dim {}, codim {} (inside its tau locus {})", s.dim, s.cod_in_g, s.cod_in_tau);
    Ok(())
}
