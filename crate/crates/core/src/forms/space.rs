use super::form::BinaryForm;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rref, EchelonBasis, Field, Matrix, Ring};

/// A subspace of `R_j`, stored as its reduced row-echelon basis.
///
/// The zero subspace is allowed (it appears as a component of graded ideal
/// slices); the invariants of [`crate::invariants`] require `dim >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace<F: Field> {
    j: usize,
    basis: Matrix<F>,
}

impl<F: Field> FormSpace<F> {
    /// The span of `forms`, which must be linearly independent forms of
    /// degree `j`.
    pub fn from_forms(j: usize, forms: &[BinaryForm<F>]) -> Result<Self> {
        let rows: Vec<Vec<F>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
        Self::from_independent_rows(forms.first().map(|f| f.ctx()), j, rows)
    }

    /// Like [`FormSpace::from_forms`] but from coefficient rows; reports the
    /// first row of the wrong length or dependent on earlier rows.
    pub fn from_independent_rows(ctx: Option<F::Ctx>, j: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let Some(ctx) = ctx.or_else(|| rows.first().and_then(|r| r.first()).map(Ring::ctx)) else {
            return Err(Error::InvalidDimension { j, d: 0 });
        };
        let mut ech = EchelonBasis::new(ctx, j + 1);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != j + 1 {
                return Err(Error::RowLength {
                    row: i,
                    expected: j + 1,
                    found: r.len(),
                });
            }
            if !ech.insert(r) {
                return Err(Error::DependentRow { row: i });
            }
        }
        Ok(Self::span_rows(ctx, j, rows))
    }

    /// The span of arbitrary coefficient rows of length `j + 1`.
    pub fn span_rows(ctx: F::Ctx, j: usize, rows: Vec<Vec<F>>) -> Self {
        let m = Matrix::from_rows(ctx, j + 1, rows);
        let r = rref(&m);
        let basis = Matrix::from_rows(
            ctx,
            j + 1,
            (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect(),
        );
        FormSpace { j, basis }
    }

    /// The span of arbitrary forms of degree `j`.
    pub fn span(ctx: F::Ctx, j: usize, forms: &[BinaryForm<F>]) -> Self {
        Self::span_rows(ctx, j, forms.iter().map(|f| f.coeffs().to_vec()).collect())
    }

    pub fn zero(ctx: F::Ctx, j: usize) -> Self {
        FormSpace {
            j,
            basis: Matrix::zeros(ctx, 0, j + 1),
        }
    }

    /// All of `R_j`.
    pub fn full(ctx: F::Ctx, j: usize) -> Self {
        FormSpace {
            j,
            basis: Matrix::identity(ctx, j + 1),
        }
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.j + 1 - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn ctx(&self) -> F::Ctx {
        self.basis.ctx()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn forms(&self) -> Vec<BinaryForm<F>> {
        (0..self.dim())
            .map(|i| BinaryForm::new(self.basis.row(i).to_vec()))
            .collect()
    }

    fn echelon(&self) -> EchelonBasis<F> {
        let mut e = EchelonBasis::new(self.ctx(), self.j + 1);
        for i in 0..self.dim() {
            e.insert(self.basis.row(i));
        }
        e
    }

    pub fn contains(&self, f: &BinaryForm<F>) -> bool {
        f.degree() == self.j && self.echelon().contains(f.coeffs())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        if self.j != other.j {
            return false;
        }
        let e = other.echelon();
        (0..self.dim()).all(|i| e.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.j, other.j);
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Self::span_rows(self.ctx(), self.j, rows)
    }

    /// `R_s · V`, a subspace of `R_{j+s}`.
    pub fn product_space(&self, s: usize) -> Self {
        if s == 0 {
            return self.clone();
        }
        let ctx = self.ctx();
        let width = self.j + s + 1;
        let mut rows = Vec::with_capacity(self.dim() * (s + 1));
        for i in 0..self.dim() {
            let f = self.basis.row(i);
            for a in 0..=s {
                let mut r = vec![F::zero(ctx); width];
                r[a..a + f.len()].clone_from_slice(f);
                rows.push(r);
            }
        }
        Self::span_rows(ctx, self.j + s, rows)
    }

    /// `g · V`, a subspace of `R_{j + deg g}`.
    pub fn multiply_by(&self, g: &BinaryForm<F>) -> Self {
        let forms: Vec<_> = self.forms().iter().map(|f| f.mul(g)).collect();
        Self::span(self.ctx(), self.j + g.degree(), &forms)
    }

    /// `V : g`, when `g` divides every element of `V`.
    pub fn divide_by(&self, g: &BinaryForm<F>) -> Option<Self> {
        let n = self.j.checked_sub(g.degree())?;
        let forms: Option<Vec<_>> = self.forms().iter().map(|f| f.div_exact(g)).collect();
        Some(Self::span(self.ctx(), n, &forms?))
    }

    /// `V : R_k = { f in R_{j-k} : R_k · f ⊆ V }`.
    pub fn colon_space(&self, k: usize) -> Self {
        assert!(k <= self.j, "colon degree exceeds j");
        if k == 0 {
            return self.clone();
        }
        let ctx = self.ctx();
        let n = self.j + 1;
        let mut pivot_row = vec![None; n];
        for r in 0..self.dim() {
            let p = (0..n)
                .find(|&c| !self.basis.get(r, c).is_zero())
                .expect("basis rows are nonzero");
            pivot_row[p] = Some(r);
        }
        let free: Vec<usize> = (0..n).filter(|&c| pivot_row[c].is_none()).collect();
        // residue of the unit vector e_i on the non-pivot coordinates
        let residue = |i: usize, c: usize| -> F {
            match pivot_row[i] {
                Some(r) => self.basis.get(r, c).neg(),
                None if i == c => F::one(ctx),
                None => F::zero(ctx),
            }
        };
        let unknowns = self.j - k + 1;
        let mut eqs = Vec::with_capacity((k + 1) * free.len());
        for a in 0..=k {
            for &c in &free {
                eqs.push((0..unknowns).map(|t| residue(t + a, c)).collect());
            }
        }
        let m = Matrix::from_rows(ctx, unknowns, eqs);
        let ker = kernel_basis(&m);
        Self::span_rows(ctx, self.j - k, ker.row_vecs())
    }

    /// `V : g = { f in R_{j - deg g} : g · f ∈ V }`.
    pub fn colon_by_form(&self, g: &BinaryForm<F>) -> Self {
        let k = g.degree();
        assert!(k <= self.j, "divisor degree exceeds j");
        let ctx = self.ctx();
        let ech = self.echelon();
        let unknowns = self.j - k + 1;
        let residues: Vec<Vec<F>> = (0..unknowns)
            .map(|t| ech.reduce(g.mul_monomial(self.j - k - t, t).coeffs()))
            .collect();
        let eqs = (0..=self.j)
            .map(|c| residues.iter().map(|r| r[c].clone()).collect())
            .collect();
        let ker = kernel_basis(&Matrix::from_rows(ctx, unknowns, eqs));
        Self::span_rows(ctx, self.j - k, ker.row_vecs())
    }

    /// Monic greatest common divisor of `V` and its degree.
    pub fn gcd_form(&self) -> Option<(BinaryForm<F>, usize)> {
        let g = BinaryForm::gcd_of(&self.forms())?;
        let c = g.degree();
        Some((g, c))
    }

    /// `R_1 · V` dimension minus `dim V`.
    pub fn tau(&self) -> usize {
        self.product_space(1).dim() - self.dim()
    }
}
