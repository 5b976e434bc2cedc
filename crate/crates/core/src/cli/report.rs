use serde::Serialize;

use super::document::{FormSpaceDocument, LoadedSpace};
use crate::error::{Error, Result};
use crate::forms::FormSpace;
use crate::invariants::{hilbert_tail, mu_basis, nose, relation_degrees, HilbertTail};
use crate::linalg::Field;
use crate::partition::Partition;
use crate::strata::StratumDescriptor;

/// Every invariant of one space, with the stratum it lies in.
#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    pub input: FormSpaceDocument,
    pub j: usize,
    pub d: usize,
    pub c: usize,
    pub tau: usize,
    pub lambda: Partition,
    pub relation_degrees: Partition,
    pub tail: HilbertTail,
    pub nose: Vec<usize>,
    pub ancestor_dims: Vec<usize>,
    pub scroll: Partition,
    pub dim_stratum: usize,
    pub cod_in_g: usize,
    pub cod_in_tau: usize,
    pub mu_basis_degrees: Partition,
}

pub fn analyze_document(doc: &FormSpaceDocument) -> Result<StratumReport> {
    match doc.load()? {
        LoadedSpace::Rational(v) => analyze_space(doc, &v),
        LoadedSpace::Prime(v) => analyze_space(doc, &v),
    }
}

pub fn analyze_space<F: Field>(doc: &FormSpaceDocument, v: &FormSpace<F>) -> Result<StratumReport> {
    let tail = hilbert_tail(v)?;
    let stratum = StratumDescriptor::from_tail(&tail)?;
    let mu = mu_basis(v)?;
    let n = nose(v);
    let (_, gcd_degree) = v.gcd_form().expect("nonzero space");
    let consistent = mu.col_degrees() == &relation_degrees(&stratum.lambda, stratum.d)?
        && gcd_degree == stratum.c
        && n.scroll.size() == stratum.d
        && n.scroll.len() == stratum.tau
        && mu.regenerates(v);
    if !consistent {
        return Err(Error::Inconsistent(format!(
            "invariants disagree for tail {tail}: relation degrees {}, gcd degree {gcd_degree}, scroll {}",
            mu.col_degrees(),
            n.scroll
        )));
    }
    Ok(StratumReport {
        input: doc.clone(),
        j: stratum.j,
        d: stratum.d,
        c: stratum.c,
        tau: stratum.tau,
        lambda: stratum.lambda,
        relation_degrees: stratum.relation_degrees,
        tail,
        nose: n.function,
        ancestor_dims: n.ancestor_dims,
        scroll: n.scroll,
        dim_stratum: stratum.dim,
        cod_in_g: stratum.cod_in_g,
        cod_in_tau: stratum.cod_in_tau,
        mu_basis_degrees: mu.col_degrees().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> FormSpaceDocument {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn reports() {
        let r = analyze_document(&doc(
            r#"{"field": "rational", "j": 6, "forms": [[1,0,0,0,0,0,0],[0,1,0,0,0,0,0],[0,0,0,0,0,0,1]]}"#,
        ))
        .unwrap();
        assert_eq!(r.tau, 2);
        assert_eq!(r.relation_degrees.parts(), &[5, 1]);
        assert_eq!(r.tail.values(), &[4, 3, 2, 1, 0]);

        let r = analyze_document(&doc(r#"{"field": "rational", "j": 2, "forms": [[1,0,0],[0,1,0],[0,0,1]]}"#))
            .unwrap();
        assert_eq!(r.tail.values(), &[0]);

        let r = analyze_document(&doc(
            r#"{"field": {"prime": 101}, "j": 6, "forms": [[1,0,0,0,0,0,0],[0,0,0,1,0,0,0],[0,1,0,0,0,0,0]]}"#,
        ))
        .unwrap();
        assert_eq!(r.c, 3);

        // x · <x^5, x^2 y^3, y^5>
        let r = analyze_document(&doc(
            r#"{"field": "rational", "j": 6, "forms": [[1,0,0,0,0,0,0],[0,0,0,1,0,0,0],[0,0,0,0,0,1,0]]}"#,
        ))
        .unwrap();
        assert_eq!(r.c, 1);
    }
}
