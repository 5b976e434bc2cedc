use serde::{Deserialize, Serialize};

use super::formulas::{cod_tau, ell_partition};
use crate::invariants::ancestor_dim_from_scroll;
use crate::partition::{enumerate_partitions, Partition};

/// Stratum of `Grass(R_j, d)` with a fixed scroll partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoseStratumDescriptor {
    pub j: usize,
    pub d: usize,
    pub scroll: Partition,
    pub tau: usize,
    pub c: usize,
    /// `N_0, ..., N_j`
    pub function: Vec<usize>,
    /// `dim V̄_0, ..., dim V̄_j`
    pub ancestor_dims: Vec<usize>,
    pub dim: usize,
    pub cod_in_tau: usize,
}

impl NoseStratumDescriptor {
    pub fn new(j: usize, d: usize, scroll: Partition) -> Self {
        let tau = scroll.len();
        let ancestor_dims: Vec<usize> =
            (0..=j).map(|deg| ancestor_dim_from_scroll(&scroll, j - deg)).collect();
        let function = ancestor_dims.iter().enumerate().map(|(deg, a)| deg + 1 - a).collect();
        let cod_in_tau = ell_partition(&scroll, 0, tau);
        let cod = cod_tau(j, d, tau).expect("scroll length within the tau bounds");
        let c = if tau == 1 { j + 1 - d } else { 0 };
        NoseStratumDescriptor {
            j,
            d,
            scroll,
            tau,
            c,
            function,
            ancestor_dims,
            dim: d * (j + 1 - d) - cod - cod_in_tau,
            cod_in_tau,
        }
    }

    /// `self` lies in the closure of `other`: nose functions termwise `≤`.
    pub fn in_closure_of(&self, other: &NoseStratumDescriptor) -> bool {
        self.function.iter().zip(&other.function).all(|(a, b)| a <= b)
    }
}

/// One stratum per partition of `d` into at most `min(d, j + 2 - d)` parts,
/// in ascending lexicographic order.
pub fn nose_strata(j: usize, d: usize) -> Vec<NoseStratumDescriptor> {
    assert!(d >= 1 && d <= j + 1, "need 1 <= d <= j + 1");
    enumerate_partitions(d, d.min(j + 2 - d), false)
        .into_iter()
        .map(|a| NoseStratumDescriptor::new(j, d, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scroll_table() {
        let rows = nose_strata(9, 4);
        let dims: Vec<usize> = rows.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![24, 20, 14, 13, 6]);
        let window: Vec<Vec<usize>> = rows.iter().map(|r| r.ancestor_dims[6..].to_vec()).collect();
        assert_eq!(
            window,
            vec![vec![0, 0, 0, 4], vec![0, 0, 1, 4], vec![0, 0, 2, 4], vec![0, 1, 2, 4], vec![1, 2, 3, 4]]
        );
        assert_eq!(rows[1].function, vec![1, 2, 3, 4, 5, 6, 7, 8, 8, 6]);
        assert_eq!(rows[4].c, 6);
    }

    #[test]
    fn closure_reverses_dominance() {
        for (j, d) in [(9, 4), (10, 5), (12, 6), (7, 3)] {
            let rows = nose_strata(j, d);
            for a in &rows {
                for b in &rows {
                    assert_eq!(
                        a.in_closure_of(b),
                        b.scroll.bruhat_leq(&a.scroll).unwrap(),
                        "{} vs {}",
                        a.scroll,
                        b.scroll
                    );
                }
            }
        }
    }
}
