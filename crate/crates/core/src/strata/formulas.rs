use crate::error::{Error, Result};
use crate::invariants::HilbertTail;
use crate::partition::{pair_excess, Partition};

/// `h_{j+i} = c + Σ_u (λ_u - i)^+`
pub fn tail_from_lambda(lambda: &Partition, c: usize, j: usize, d: usize) -> Result<HilbertTail> {
    if d == 0 || d > j + 1 || lambda.size() + c + d != j + 1 {
        return Err(Error::InvalidPartition(format!(
            "{lambda} with c = {c} does not fit j = {j}, d = {d}"
        )));
    }
    if lambda.len() > d - 1 {
        return Err(Error::InvalidPartition(format!("{lambda} has more than d - 1 parts")));
    }
    let values = (0..=lambda.largest())
        .map(|i| c + lambda.parts().iter().map(|&l| l.saturating_sub(i)).sum::<usize>())
        .collect();
    HilbertTail::new(j, values)
}

/// Nonzero products `(e_i + 1) · e_{i+1}` for `i >= j`, with `e_j = d - 1`.
pub fn dim_gh_terms(tail: &HilbertTail) -> Vec<(usize, usize)> {
    let mut e = vec![tail.d() - 1];
    e.extend(tail.differences());
    e.windows(2)
        .map(|w| (w[0] + 1, w[1]))
        .filter(|&(_, b)| b > 0)
        .collect()
}

/// Dimension of the family of graded ideals with Hilbert function
/// `(1, 2, ..., j, tail)`.
pub fn dim_gh(tail: &HilbertTail) -> usize {
    tail.c() + dim_gh_terms(tail).iter().map(|(a, b)| a * b).sum::<usize>()
}

/// Same count for an arbitrary Hilbert function of a graded ideal, given from
/// degree 0 up to (and including) its stable value.
///
/// The sum starts at the initial degree: the first `i` with `h_i < i + 1`.
pub fn dim_gh_full(h: &[usize]) -> Result<usize> {
    let Some(start) = h.iter().enumerate().position(|(i, &v)| v < i + 1) else {
        return Err(Error::InvalidTail(format!("{h:?} never drops below i + 1")));
    };
    let c = *h.last().unwrap();
    let prev = |i: usize| if i == 0 { 0 } else { h[i - 1] };
    let mut e = Vec::new();
    for i in start..h.len() {
        if h[i] > prev(i) && i > start {
            return Err(Error::InvalidTail(format!("{h:?} increases after degree {start}")));
        }
        e.push(prev(i).saturating_sub(h[i]));
    }
    Ok(c + e.windows(2).map(|w| (w[0] + 1) * w[1]).sum::<usize>())
}

/// Codimension in `Grass(R_j, d)` of the stratum with relation degrees `D`.
pub fn cod_in_g(relation_degrees: &Partition, c: usize, d: usize) -> usize {
    ell_partition(relation_degrees, c, d)
}

/// Codimension of the locus `τ(V) = tau` in `Grass(R_j, d)`.
pub fn cod_tau(j: usize, d: usize, tau: usize) -> Result<usize> {
    if d == 0 || d > j + 1 || tau == 0 || tau > d.min(j + 2 - d) {
        return Err(Error::EmptyStratum { j, d, tau });
    }
    Ok((d - tau) * (j + 2 - d - tau))
}

/// `c · (k - 1) + Σ_{u<v} (p_u - p_v - 1)^+`
///
/// With `k = d` and `p = D` this is the codimension in `Grass(R_j, d)`; with
/// `k = τ` and `p = λ` it is the codimension inside the `τ` locus.
pub fn ell_partition(p: &Partition, c: usize, k: usize) -> usize {
    c * k.saturating_sub(1) + pair_excess(p.parts())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(j: usize, v: &[usize]) -> HilbertTail {
        HilbertTail::new(j, v.to_vec()).unwrap()
    }

    #[test]
    fn tails_from_lambda() {
        assert_eq!(tail_from_lambda(&p(&[5, 1]), 0, 8, 3).unwrap(), t(8, &[6, 4, 3, 2, 1, 0]));
        assert_eq!(tail_from_lambda(&Partition::empty(), 4, 6, 3).unwrap(), t(6, &[4]));
        assert_eq!(tail_from_lambda(&p(&[2, 1]), 1, 6, 3).unwrap(), t(6, &[4, 2, 1]));
        assert!(tail_from_lambda(&p(&[2, 1]), 0, 6, 3).is_err());
    }

    #[test]
    fn dims_of_ideal_families() {
        let tail = t(8, &[6, 4, 3, 2, 1, 0]);
        assert_eq!(dim_gh(&tail), 15);
        assert_eq!(dim_gh_terms(&tail), vec![(3, 2), (3, 1), (2, 1), (2, 1), (2, 1)]);
        assert_eq!(dim_gh(&t(6, &[4, 2, 0])), 12);
        assert_eq!(dim_gh(&t(6, &[4])), 4);
        assert_eq!(dim_gh_full(&tail.full_function()).unwrap(), 15);
        // a quadric (P^2) plus one cubic modulo its multiples (P^1)
        assert_eq!(dim_gh_full(&[1, 2, 2, 1, 0]).unwrap(), 3);
    }

    #[test]
    fn codimensions() {
        assert_eq!(cod_in_g(&p(&[5, 1]), 0, 3), 3);
        assert_eq!(cod_in_g(&p(&[3, 3]), 0, 3), 0);
        assert_eq!(cod_in_g(&p(&[2, 2]), 2, 3), 4);
        assert_eq!(cod_tau(6, 3, 2).unwrap(), 3);
        assert_eq!(cod_tau(9, 4, 4).unwrap(), 0);
        assert_eq!(cod_tau(9, 4, 3).unwrap(), 4);
        assert!(matches!(cod_tau(6, 3, 4), Err(Error::EmptyStratum { .. })));
        assert_eq!(ell_partition(&p(&[3, 1]), 0, 3), 1);
        assert_eq!(ell_partition(&p(&[7]), 0, 3), 0);
    }
}
