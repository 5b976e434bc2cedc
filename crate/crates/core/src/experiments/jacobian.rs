use crate::error::{Error, Result};
use crate::forms::BinaryForm;
use crate::invariants::signed_minors;
use crate::linalg::{rank, Dual, Fp, Matrix, Modulus};
use crate::partition::Partition;

use super::rng::{random_form, stream_rng};
use super::sample::MAX_RESAMPLES;

/// Rank at a random point of the differential of
/// (relation-matrix coefficients) → (coefficients of the signed minors).
///
/// This is the dimension of the family of ordered `d`-tuples of degree-`j`
/// forms whose relation degrees are `D`, except on a locus of probability
/// `O(1/p)`.
pub fn jacobian_rank_dim(j: usize, d: usize, degrees: &Partition, seed: u64, modulus: Modulus) -> Result<usize> {
    if degrees.len() + 1 != d || degrees.size() != j {
        return Err(Error::InvalidPartition(format!(
            "relation degrees {degrees} need d - 1 parts summing to j = {j}"
        )));
    }
    for attempt in 0..MAX_RESAMPLES {
        let mut rng = stream_rng(seed, attempt as u64);
        let point: Vec<Vec<BinaryForm<Fp>>> = (0..d)
            .map(|_| degrees.parts().iter().map(|&deg| random_form(modulus, deg, &mut rng)).collect())
            .collect();
        let minors = signed_minors(modulus, &point);
        let values = Matrix::from_rows(
            modulus,
            j + 1,
            minors.iter().map(|f| f.coeffs().to_vec()).collect(),
        );
        if rank(&values) < d {
            continue;
        }
        let lift = |f: &BinaryForm<Fp>| BinaryForm::new(f.coeffs().iter().map(|&a| Dual::constant(a)).collect());
        let base: Vec<Vec<BinaryForm<Dual<Fp>>>> =
            point.iter().map(|row| row.iter().map(lift).collect()).collect();
        let mut jac = Vec::new();
        for (r, row) in point.iter().enumerate() {
            for (u, entry) in row.iter().enumerate() {
                for k in 0..=entry.degree() {
                    let mut seeded = base.clone();
                    let mut coeffs = seeded[r][u].coeffs().to_vec();
                    coeffs[k] = Dual::variable(entry.coeffs()[k]);
                    seeded[r][u] = BinaryForm::new(coeffs);
                    let out = signed_minors(modulus, &seeded);
                    jac.push(
                        out.iter()
                            .flat_map(|f| f.coeffs().iter().map(|x| x.tangent))
                            .collect::<Vec<Fp>>(),
                    );
                }
            }
        }
        return Ok(rank(&Matrix::from_rows(modulus, d * (j + 1), jac)));
    }
    Err(Error::SamplingExhausted {
        attempts: MAX_RESAMPLES,
        reason: format!("minors stayed dependent for relation degrees {degrees}"),
    })
}
