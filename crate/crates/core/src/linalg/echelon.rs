use super::field::{Field, Ring};
use super::matrix::Matrix;

/// An incrementally built row space in semi-reduced echelon form.
///
/// Each stored row has a leading 1 at its pivot and zeros at the pivots of all
/// rows stored before it, so sequential reduction against the stored rows is
/// exact.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    ctx: F::Ctx,
    width: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(ctx: F::Ctx, width: usize) -> Self {
        EchelonBasis {
            ctx,
            width,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Residue of `v` modulo the stored rows.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.width);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let f = v[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (k, x) in row.iter().enumerate().skip(*pivot) {
                if !x.is_zero() {
                    v[k] = v[k].sub(&f.mul(x));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Ring::is_zero)
    }

    /// Adds `v`; returns false (and leaves the basis unchanged) if `v` is
    /// already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inv().expect("nonzero");
        for x in r.iter_mut().skip(pivot) {
            *x = x.mul(&inv);
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(
            self.ctx,
            self.width,
            self.rows.iter().map(|(_, r)| r.clone()).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64((), x)).collect()
    }

    #[test]
    fn insert_detects_dependence() {
        let mut e = EchelonBasis::<Rational>::new((), 3);
        assert!(e.insert(&v(&[0, 1, 1])));
        assert!(e.insert(&v(&[1, 1, 0])));
        assert!(!e.insert(&v(&[1, 3, 2])));
        assert!(e.contains(&v(&[2, 0, -2])));
        assert!(e.insert(&v(&[0, 0, 1])));
        assert_eq!(e.dim(), 3);
    }
}
