use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::forms::{BinaryForm, FormSpace};
use crate::linalg::{Fp, Modulus};

/// Generator for trial `stream` of a run seeded by `seed`; every trial is
/// replayable on its own.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Child seed for a nested counter, mixed with splitmix64.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn random_form<R: Rng + ?Sized>(m: Modulus, degree: usize, rng: &mut R) -> BinaryForm<Fp> {
    BinaryForm::new((0..=degree).map(|_| Fp::random(m, rng)).collect())
}

/// Product of `count` random linear forms, so the result splits over `F_p`.
pub fn random_split_form<R: Rng + ?Sized>(m: Modulus, count: usize, rng: &mut R) -> BinaryForm<Fp> {
    (0..count).fold(BinaryForm::one(m), |acc, _| acc.mul(&random_form(m, 1, rng)))
}

/// A uniformly random `d`-dimensional subspace of `R_j` (dependent draws are
/// redrawn).
pub fn random_space<R: Rng + ?Sized>(m: Modulus, j: usize, d: usize, rng: &mut R) -> FormSpace<Fp> {
    loop {
        let forms: Vec<_> = (0..d).map(|_| random_form(m, j, rng)).collect();
        if let Ok(v) = FormSpace::from_forms(j, &forms) {
            return v;
        }
    }
}

/// A random element of `space` (assumed nonzero).
pub fn random_element<R: Rng + ?Sized>(space: &FormSpace<Fp>, rng: &mut R) -> BinaryForm<Fp> {
    let m = space.ctx();
    space
        .forms()
        .iter()
        .fold(BinaryForm::zero(m, space.j()), |acc, f| acc.add(&f.scale(&Fp::random(m, rng))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = stream_rng(5, 1).gen();
        let b: u64 = stream_rng(5, 1).gen();
        let c: u64 = stream_rng(5, 2).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(derive_seed(5, 0), derive_seed(5, 1));
    }

    #[test]
    fn split_forms_have_full_degree() {
        let m = Modulus::default();
        let mut rng = stream_rng(1, 0);
        assert_eq!(random_split_form(m, 3, &mut rng).degree(), 3);
        assert_eq!(random_space(m, 6, 3, &mut rng).dim(), 3);
    }
}
