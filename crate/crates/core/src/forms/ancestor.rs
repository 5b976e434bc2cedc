use super::space::FormSpace;
use crate::linalg::Field;

/// Graded pieces of an ideal of `k[x,y]` in the degree window `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdealSlice<F: Field> {
    lo: usize,
    components: Vec<FormSpace<F>>,
}

impl<F: Field> GradedIdealSlice<F> {
    pub fn new(lo: usize, components: Vec<FormSpace<F>>) -> Self {
        for (i, c) in components.iter().enumerate() {
            assert_eq!(c.j(), lo + i, "component degrees must be consecutive");
        }
        GradedIdealSlice { lo, components }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.lo + self.components.len() - 1
    }

    pub fn component(&self, degree: usize) -> Option<&FormSpace<F>> {
        degree
            .checked_sub(self.lo)
            .and_then(|i| self.components.get(i))
    }

    pub fn components(&self) -> &[FormSpace<F>] {
        &self.components
    }

    /// Dimension of each component, lowest degree first.
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(FormSpace::dim).collect()
    }

    /// `R_1 · I_i ⊆ I_{i+1}` throughout the window.
    pub fn is_closed_under_r1(&self) -> bool {
        self.components
            .windows(2)
            .all(|w| w[0].product_space(1).is_subspace_of(&w[1]))
    }

    /// Minimal generators per degree: `dim I_i - dim R_1 I_{i-1}`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let below = if i == 0 {
                0
            } else {
                self.components[i - 1].product_space(1).dim()
            };
            out.push(c.dim() - below);
        }
        out
    }

    pub fn generator_count(&self) -> usize {
        self.generator_counts().iter().sum()
    }
}

/// `V̄ = V:R_j + ... + V:R_1 + (V)`, in degrees `0..=j`.
///
/// The degree `j - k` piece is `V : R_k`.
pub fn ancestor_ideal<F: Field>(v: &FormSpace<F>) -> GradedIdealSlice<F> {
    let j = v.j();
    let components = (0..=j).map(|deg| v.colon_space(j - deg)).collect();
    GradedIdealSlice::new(0, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BinaryForm;
    use crate::linalg::Rational;

    #[test]
    fn principal_ancestor() {
        // <x^2, xy, y^2> · x^4
        let x4 = BinaryForm::<Rational>::monomial((), 4, 0);
        let v = FormSpace::full((), 2).multiply_by(&x4);
        let a = ancestor_ideal(&v);
        assert_eq!(a.dims(), vec![0, 0, 0, 0, 1, 2, 3]);
        assert!(a.component(4).unwrap().contains(&x4));
        assert_eq!(a.component(6).unwrap(), &v);
        assert_eq!(a.generator_count(), 1);
        assert!(a.is_closed_under_r1());
    }

    #[test]
    fn monomial_ancestor() {
        let forms: Vec<_> = [0, 1, 6]
            .iter()
            .map(|&b| BinaryForm::<Rational>::monomial((), 6, b))
            .collect();
        let v = FormSpace::from_forms(6, &forms).unwrap();
        let a = ancestor_ideal(&v);
        assert_eq!(a.dims(), vec![0, 0, 0, 0, 0, 1, 3]);
        assert_eq!(a.generator_count(), 2);
    }
}
