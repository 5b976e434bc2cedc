//! Dense matrices and Gaussian elimination.
//!
//! Elimination always takes the first nonzero entry of a column as pivot, so
//! the result is a deterministic function of the input.

use std::fmt;

use super::field::{Field, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Ring> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Ring> Matrix<F> {
    pub fn zeros(ctx: F::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![F::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    /// Builds a matrix from row vectors, each of length `cols`.
    ///
    /// Panics if a row has the wrong length.
    pub fn from_rows(ctx: F::Ctx, cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            ctx,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }
}

impl<F: Ring> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{} x {}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F: Ring> {
    pub rank: usize,
    /// Same shape as the input; nonzero rows first.
    pub reduced: Matrix<F>,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row-echelon form.
pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| !a.data[r * cols + col].is_zero()) else {
            continue;
        };
        if found != prow {
            for c in col..cols {
                a.data.swap(found * cols + c, prow * cols + c);
            }
        }
        let inv = a.data[prow * cols + col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for c in col..cols {
                let v = a.data[prow * cols + c].mul(&inv);
                a.data[prow * cols + c] = v;
            }
        }
        let pivot_row: Vec<F> = a.data[prow * cols + col..(prow + 1) * cols].to_vec();
        for r in 0..rows {
            if r == prow {
                continue;
            }
            let factor = a.data[r * cols + col].clone();
            if factor.is_zero() {
                continue;
            }
            for (k, pv) in pivot_row.iter().enumerate() {
                if pv.is_zero() {
                    continue;
                }
                let idx = r * cols + col + k;
                let v = a.data[idx].sub(&factor.mul(pv));
                a.data[idx] = v;
            }
        }
        pivot_cols.push(col);
        prow += 1;
    }
    Rref {
        rank: pivot_cols.len(),
        reduced: a,
        pivot_cols,
    }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).rank
}

/// Basis of the right null space, one vector per row.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let Rref {
        rank,
        reduced,
        pivot_cols,
    } = rref(m);
    let cols = m.cols;
    let ctx = m.ctx;
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut out = Vec::with_capacity(cols - rank);
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(ctx); cols];
        v[free] = F::one(ctx);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = reduced.get(r, free).neg();
        }
        out.push(v);
    }
    debug_assert_eq!(out.len() + rank, cols, "rank-nullity");
    Matrix::from_rows(ctx, cols, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{Fp, Modulus, Rational};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            (),
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_i64((), v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_rref() {
        let r = rref(&Matrix::<Rational>::identity((), 2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = Matrix::<Rational>::zeros((), 3, 4);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&Matrix::<Rational>::zeros((), 2, 3)).rows(), 3);
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert_eq!(kernel_basis(&Matrix::<Rational>::identity((), 3)).rows(), 0);
    }

    #[test]
    fn kernel_of_single_row() {
        let m = q(&[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.rows(), 2);
        for r in 0..k.rows() {
            assert!(m.mul_vec(k.row(r)).iter().all(Ring::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent_and_exact() {
        let m = q(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(rref(&r.reduced).reduced, r.reduced);
        assert_eq!(r.reduced.get(0, 0), &Rational::from_i64((), 1));
        assert_eq!(r.reduced.get(1, 2), &Rational::from_i64((), 1));
        assert_eq!(r.reduced.get(0, 1), &Rational::from_i64((), 2));
    }

    #[test]
    fn modular_rank_deficient() {
        let p = Modulus::new(5).unwrap();
        // second row is 3 * first row mod 5
        let m = Matrix::from_rows(
            p,
            2,
            vec![
                vec![Fp::new(p, 1), Fp::new(p, 2)],
                vec![Fp::new(p, 3), Fp::new(p, 1)],
            ],
        );
        assert_eq!(rank(&m), 1);
    }
}
