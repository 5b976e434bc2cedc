use serde::{Deserialize, Serialize};

use crate::forms::{ancestor_ideal, FormSpace};
use crate::linalg::Field;
use crate::partition::Partition;

/// Low-degree Hilbert function of `R / V̄` and the scroll partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nose {
    /// `N_0, ..., N_j`
    pub function: Vec<usize>,
    /// `dim V̄_0, ..., dim V̄_j`
    pub ancestor_dims: Vec<usize>,
    pub scroll: Partition,
}

/// Scroll partition from ancestor dimensions in degrees `0..=j`: the jumps
/// `dim V̄_{j-i} - dim V̄_{j-i-1}` form its conjugate.
pub fn scroll_from_ancestor_dims(dims: &[usize]) -> Partition {
    let jumps: Vec<usize> = dims
        .iter()
        .rev()
        .zip(dims.iter().rev().skip(1).chain(std::iter::once(&0)))
        .map(|(hi, lo)| hi - lo)
        .collect();
    Partition::from_unsorted(jumps).conjugate()
}

/// Ancestor dimension in degree `j - i` predicted by a scroll partition.
pub fn ancestor_dim_from_scroll(scroll: &Partition, i: usize) -> usize {
    scroll.parts().iter().map(|&a| a.saturating_sub(i)).sum()
}

pub fn nose<F: Field>(v: &FormSpace<F>) -> Nose {
    let ancestor_dims = ancestor_ideal(v).dims();
    let function = ancestor_dims
        .iter()
        .enumerate()
        .map(|(deg, dim)| deg + 1 - dim)
        .collect();
    let scroll = scroll_from_ancestor_dims(&ancestor_dims);
    Nose {
        function,
        ancestor_dims,
        scroll,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BinaryForm;
    use crate::linalg::{Fp, Modulus, Rational};
    use rand::SeedableRng;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn principal_case() {
        let f = BinaryForm::<Rational>::from_i64s((), &[1, 0, 2, 0, 0, 1, 3]);
        let v = FormSpace::full((), 3).multiply_by(&f);
        let n = nose(&v);
        assert_eq!(n.scroll, p(&[4]));
        assert_eq!(&n.ancestor_dims[6..], &[1, 2, 3, 4]);
    }

    #[test]
    fn generic_and_one_ancestor_generator() {
        let m = Modulus::new(1_000_003).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut rnd = |deg: usize| BinaryForm::new((0..=deg).map(|_| Fp::random(m, &mut rng)).collect());
        let generic: Vec<_> = (0..4).map(|_| rnd(9)).collect();
        let n = nose(&FormSpace::from_forms(9, &generic).unwrap());
        assert_eq!(n.scroll, p(&[1, 1, 1, 1]));
        assert_eq!(&n.ancestor_dims[6..], &[0, 0, 0, 4]);

        let f = rnd(8);
        let forms = vec![
            f.mul_monomial(1, 0),
            f.mul_monomial(0, 1),
            rnd(9),
            rnd(9),
        ];
        let n = nose(&FormSpace::from_forms(9, &forms).unwrap());
        assert_eq!(n.scroll, p(&[2, 1, 1]));
        assert_eq!(&n.ancestor_dims[6..], &[0, 0, 1, 4]);
        assert_eq!(n.function, vec![1, 2, 3, 4, 5, 6, 7, 8, 8, 6]);
    }

    #[test]
    fn scroll_round_trip() {
        for a in [p(&[2, 1, 1]), p(&[3, 1]), p(&[4]), p(&[2, 2])] {
            let dims: Vec<usize> = (0..=9).map(|deg| ancestor_dim_from_scroll(&a, 9 - deg)).collect();
            assert_eq!(scroll_from_ancestor_dims(&dims), a);
        }
    }
}
