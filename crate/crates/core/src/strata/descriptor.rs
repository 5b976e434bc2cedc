use serde::{Deserialize, Serialize};

use super::formulas::{cod_in_g, cod_tau, dim_gh, ell_partition, tail_from_lambda};
use crate::error::Result;
use crate::invariants::{relation_degrees, HilbertTail};
use crate::partition::{enumerate_partitions, Partition};

/// One Hilbert-function stratum of `Grass(R_j, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDescriptor {
    pub j: usize,
    pub d: usize,
    pub c: usize,
    pub tau: usize,
    pub lambda: Partition,
    pub relation_degrees: Partition,
    pub tail: HilbertTail,
    pub dim: usize,
    pub cod_in_g: usize,
    pub cod_in_tau: usize,
}

impl StratumDescriptor {
    pub fn new(j: usize, d: usize, lambda: Partition, c: usize) -> Result<Self> {
        let tail = tail_from_lambda(&lambda, c, j, d)?;
        let tau = lambda.len() + 1;
        let degrees = relation_degrees(&lambda, d)?;
        let ambient = d * (j + 1 - d);
        let dim = dim_gh(&tail);
        let cod = cod_in_g(&degrees, c, d);
        let cod_in_tau = ell_partition(&lambda, c, tau);
        debug_assert_eq!(dim + cod, ambient);
        debug_assert_eq!(cod, cod_tau(j, d, tau)? + cod_in_tau);
        Ok(StratumDescriptor {
            j,
            d,
            c,
            tau,
            lambda,
            relation_degrees: degrees,
            tail,
            dim,
            cod_in_g: cod,
            cod_in_tau,
        })
    }

    pub fn from_tail(tail: &HilbertTail) -> Result<Self> {
        let (lambda, c) = crate::invariants::lambda_of(tail);
        Self::new(tail.j(), tail.d(), lambda, c)
    }
}

/// Every stratum of `Grass(R_j, d)`, ordered by `c` and then by `λ`
/// lexicographically (a linear extension of the dominance order).
pub fn strata(j: usize, d: usize) -> Vec<StratumDescriptor> {
    assert!(d >= 1 && d <= j + 1, "need 1 <= d <= j + 1");
    let cod = j + 1 - d;
    let max_parts = d.min(j + 2 - d) - 1;
    let mut out = Vec::new();
    for c in 0..=cod {
        for lambda in enumerate_partitions(cod - c, max_parts, false) {
            out.push(StratumDescriptor::new(j, d, lambda, c).expect("enumerated stratum is valid"));
        }
    }
    out
}

pub fn admissible_tails(j: usize, d: usize) -> Vec<HilbertTail> {
    strata(j, d).into_iter().map(|s| s.tail).collect()
}

/// Tails built directly from the admissibility conditions: differences
/// weakly decreasing from `d - 1`, and the `τ` bounds.
pub fn admissible_tails_by_predicate(j: usize, d: usize) -> Vec<HilbertTail> {
    fn rec(j: usize, cur: &mut Vec<usize>, prev: usize, out: &mut Vec<HilbertTail>) {
        let tail = HilbertTail::new(j, cur.clone()).expect("strictly decreasing");
        if tail.is_admissible() {
            out.push(tail);
        }
        let h = *cur.last().unwrap();
        for e in 1..=prev.min(h) {
            cur.push(h - e);
            rec(j, cur, e, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(j, &mut vec![j + 1 - d], d - 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn counts() {
        assert_eq!(strata(6, 3).len(), 9);
        assert_eq!(strata(8, 3).len(), 16);
        assert_eq!(strata(5, 6).len(), 1);
        assert_eq!(strata(5, 6)[0].tail.values(), &[0]);
    }

    #[test]
    fn constructions_coincide() {
        for j in 1..=12 {
            for d in 1..=j + 1 {
                let a: BTreeSet<Vec<usize>> =
                    admissible_tails(j, d).iter().map(|t| t.values().to_vec()).collect();
                let b: BTreeSet<Vec<usize>> = admissible_tails_by_predicate(j, d)
                    .iter()
                    .map(|t| t.values().to_vec())
                    .collect();
                assert_eq!(a, b, "j = {j}, d = {d}");
                assert_eq!(a.len(), strata(j, d).len());
            }
        }
    }

    #[test]
    fn first_table_columns() {
        let rows = strata(6, 3);
        let dims: Vec<usize> = rows.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![12, 11, 9, 10, 8, 8, 7, 6, 4]);
        let cods: Vec<usize> = rows.iter().map(|s| s.cod_in_g).collect();
        assert_eq!(cods, vec![0, 1, 3, 2, 4, 4, 5, 6, 8]);
        let taus: Vec<usize> = rows.iter().map(|s| s.tau).collect();
        assert_eq!(taus, vec![3, 3, 2, 3, 2, 3, 2, 2, 1]);
    }
}
