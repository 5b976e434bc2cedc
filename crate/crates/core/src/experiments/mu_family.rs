use serde::Serialize;

use crate::partition::{pair_excess, Partition};

/// Dimensions of the family of triples of degree-`n` forms whose relation
/// module has generators in degrees `n - μ` and `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuFamilyRow {
    pub n: usize,
    pub mu: usize,
    pub relation_degrees: (usize, usize),
    /// `3(n+1) - Σ_{u<v} (D_u - D_v - 1)^+`
    pub dim_from_relations: usize,
    /// `3n + 3` for the balanced case, otherwise `2n + 2μ + 4`.
    pub dim_closed_form: usize,
}

impl MuFamilyRow {
    pub fn agrees(&self) -> bool {
        self.dim_from_relations == self.dim_closed_form
    }
}

pub fn mu_family_dims(n: usize) -> Vec<MuFamilyRow> {
    (0..=n / 2)
        .map(|mu| {
            let degrees = (n - mu, mu);
            let ambient = 3 * (n + 1);
            let closed = if mu == n / 2 { 3 * n + 3 } else { 2 * n + 2 * mu + 4 };
            MuFamilyRow {
                n,
                mu,
                relation_degrees: degrees,
                dim_from_relations: ambient - pair_excess(&[degrees.0, degrees.1]),
                dim_closed_form: closed,
            }
        })
        .collect()
}

/// The family for `ν` lies in the closure of the family for `μ` exactly when
/// `ν ≤ μ`; checks that dominance of the relation degrees says the same.
pub fn mu_family_closure_is_a_chain(n: usize) -> bool {
    let degrees = |mu: usize| Partition::from_unsorted(vec![n - mu, mu]);
    (0..=n / 2).all(|nu| {
        (0..=n / 2).all(|mu| degrees(mu).bruhat_leq(&degrees(nu)).unwrap() == (nu <= mu))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        let six = mu_family_dims(6);
        assert_eq!(six[2].dim_from_relations, 20);
        assert_eq!(six[3].dim_from_relations, 21);
        let five = mu_family_dims(5);
        assert_eq!(five[0].dim_from_relations, 14);
        assert_eq!(five[0].dim_closed_form, 14);
    }

    #[test]
    fn formulas_agree() {
        for n in 0..=20 {
            assert!(mu_family_dims(n).iter().all(MuFamilyRow::agrees), "n = {n}");
            assert!(mu_family_closure_is_a_chain(n));
        }
    }
}
