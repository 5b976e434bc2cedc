use crate::error::{Error, Result};
use crate::forms::{BinaryForm, FormSpace};
use crate::invariants::{hilbert_tail, signed_minors, HilbertTail};
use crate::linalg::{Fp, Modulus};
use crate::partition::Partition;
use crate::strata::tail_from_lambda;

use super::rng::{random_form, random_split_form, stream_rng};

/// Resamples allowed before a target is declared unreachable.
pub const MAX_RESAMPLES: usize = 25;

/// A random space built from a relation matrix with prescribed column degrees.
#[derive(Clone, Debug)]
pub struct HBSample {
    pub seed: u64,
    pub j: usize,
    pub d: usize,
    pub target_degrees: Partition,
    pub target_c: usize,
    /// `d × (d-1)`, row `i` holds the entries multiplying generator `i`.
    pub matrix: Vec<Vec<BinaryForm<Fp>>>,
    pub common_factor: BinaryForm<Fp>,
    pub space: FormSpace<Fp>,
    pub tail: HilbertTail,
    /// Draws used, counting the accepted one.
    pub attempts: usize,
}

/// Tail expected for relation degrees `D` and common-factor degree `c`.
pub fn expected_tail(j: usize, d: usize, degrees: &Partition, c: usize) -> Result<HilbertTail> {
    if degrees.len() + 1 != d || degrees.size() + c != j {
        return Err(Error::InvalidPartition(format!(
            "relation degrees {degrees} need d - 1 = {} parts summing to j - c = {}",
            d as i64 - 1,
            j as i64 - c as i64
        )));
    }
    let lambda = Partition::from_unsorted(degrees.parts().iter().map(|p| p - 1).collect());
    tail_from_lambda(&lambda, c, j, d)
}

/// Draws entries of the prescribed degrees, forms `g · (signed minors)` with
/// `g` a product of `c` random linear forms, and keeps the first draw whose
/// span has dimension `d` and the expected tail.
pub fn sample_hilbert_burch(
    j: usize,
    d: usize,
    degrees: &Partition,
    c: usize,
    seed: u64,
    modulus: Modulus,
) -> Result<HBSample> {
    let target = expected_tail(j, d, degrees, c)?;
    for attempt in 0..MAX_RESAMPLES {
        let mut rng = stream_rng(seed, attempt as u64);
        let matrix: Vec<Vec<BinaryForm<Fp>>> = (0..d)
            .map(|_| degrees.parts().iter().map(|&deg| random_form(modulus, deg, &mut rng)).collect())
            .collect();
        let g = random_split_form(modulus, c, &mut rng);
        let forms: Vec<_> = signed_minors(modulus, &matrix).iter().map(|f| f.mul(&g)).collect();
        let Ok(space) = FormSpace::from_forms(j, &forms) else {
            continue;
        };
        let tail = hilbert_tail(&space)?;
        if tail == target {
            return Ok(HBSample {
                seed,
                j,
                d,
                target_degrees: degrees.clone(),
                target_c: c,
                matrix,
                common_factor: g,
                space,
                tail,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::SamplingExhausted {
        attempts: MAX_RESAMPLES,
        reason: format!("no draw reached tail {target} for relation degrees {degrees}, c = {c}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{degrees_from_syzygy_oracle, lambda_of, relation_degrees};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hits_requested_strata() {
        let m = Modulus::default();
        let s = sample_hilbert_burch(6, 3, &p(&[3, 3]), 0, 1, m).unwrap();
        assert_eq!(s.tail.values(), &[4, 2, 0]);
        let s = sample_hilbert_burch(6, 3, &p(&[5, 1]), 0, 1, m).unwrap();
        assert_eq!(s.tail.values(), &[4, 3, 2, 1, 0]);
        let s = sample_hilbert_burch(6, 3, &p(&[2, 2]), 2, 1, m).unwrap();
        assert_eq!(s.tail.values(), &[4, 2]);
        let s = sample_hilbert_burch(8, 3, &p(&[5, 3]), 0, 9, m).unwrap();
        assert_eq!(degrees_from_syzygy_oracle(&s.space).unwrap(), p(&[5, 3]));
        let (lambda, c) = lambda_of(&s.tail);
        assert_eq!(relation_degrees(&lambda, 3).unwrap(), p(&[5, 3]));
        assert_eq!(c, 0);
    }

    #[test]
    fn rejects_bad_degrees() {
        let m = Modulus::default();
        assert!(sample_hilbert_burch(6, 3, &p(&[3, 2]), 0, 1, m).is_err());
        assert!(sample_hilbert_burch(6, 3, &p(&[6]), 0, 1, m).is_err());
    }
}
