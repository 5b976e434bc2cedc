use crate::error::{Error, Result};
use crate::forms::{BinaryForm, FormSpace};
use crate::linalg::{kernel_basis, EchelonBasis, Field, Matrix, Ring};
use crate::partition::Partition;

/// Minimal relations among a basis of `V`, one column per relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasis<F: Field> {
    j: usize,
    generators: Vec<BinaryForm<F>>,
    columns: Vec<Vec<BinaryForm<F>>>,
    col_degrees: Partition,
    gcd: BinaryForm<F>,
}

impl<F: Field> MuBasis<F> {
    pub fn j(&self) -> usize {
        self.j
    }

    pub fn d(&self) -> usize {
        self.generators.len()
    }

    /// The basis of `V` the relations refer to.
    pub fn generators(&self) -> &[BinaryForm<F>] {
        &self.generators
    }

    /// `columns()[u][i]` multiplies generator `i` in relation `u`.
    pub fn columns(&self) -> &[Vec<BinaryForm<F>>] {
        &self.columns
    }

    pub fn col_degrees(&self) -> &Partition {
        &self.col_degrees
    }

    /// Monic common factor of `V`; relations of `V` and `V : gcd` coincide.
    pub fn gcd(&self) -> &BinaryForm<F> {
        &self.gcd
    }

    /// The `d × (d-1)` relation matrix, row `i` for generator `i`.
    pub fn matrix_rows(&self) -> Vec<Vec<BinaryForm<F>>> {
        (0..self.d())
            .map(|i| self.columns.iter().map(|col| col[i].clone()).collect())
            .collect()
    }

    pub fn signed_minors(&self) -> Vec<BinaryForm<F>> {
        let ctx = self.generators[0].ctx();
        signed_minors(ctx, &self.matrix_rows())
    }

    /// `gcd · span(minors)` reproduces `V`.
    pub fn regenerates(&self, v: &FormSpace<F>) -> bool {
        let forms: Vec<_> = self.signed_minors().iter().map(|m| m.mul(&self.gcd)).collect();
        FormSpace::span(v.ctx(), v.j(), &forms) == *v
    }
}

/// Coefficient vector of `Σ_i a_i f_i` in the unknowns `a_i ∈ R_s`.
fn relation_map<F: Field>(ctx: F::Ctx, gens: &[BinaryForm<F>], s: usize) -> Matrix<F> {
    let j = gens[0].degree();
    let d = gens.len();
    let mut m = Matrix::zeros(ctx, j + s + 1, d * (s + 1));
    for (i, f) in gens.iter().enumerate() {
        for a in 0..=s {
            for (e, coeff) in f.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    m.set(e + a, i * (s + 1) + a, coeff.clone());
                }
            }
        }
    }
    m
}

/// Finds the relation module degree by degree: the new relations in degree
/// `s` complete the multiples of lower-degree relations inside the kernel of
/// `R_s^d -> R_{j+s}`.
pub fn mu_basis<F: Field>(v: &FormSpace<F>) -> Result<MuBasis<F>> {
    let (j, d, ctx) = (v.j(), v.dim(), v.ctx());
    if d == 0 {
        return Err(Error::InvalidDimension { j, d });
    }
    let generators = v.forms();
    let (gcd, _) = v.gcd_form().expect("nonzero space has a gcd");
    let mut found: Vec<(usize, Vec<BinaryForm<F>>)> = Vec::new();
    let mut s = 0;
    while found.len() + 1 < d {
        s += 1;
        if s > j + 1 {
            return Err(Error::Inconsistent(format!(
                "only {} of {} relations found by degree {}",
                found.len(),
                d - 1,
                j + 1
            )));
        }
        let width = d * (s + 1);
        let mut old = EchelonBasis::new(ctx, width);
        for (deg, col) in &found {
            for b in 0..=(s - deg) {
                let mut vec = vec![F::zero(ctx); width];
                for (i, entry) in col.iter().enumerate() {
                    for (a, coeff) in entry.coeffs().iter().enumerate() {
                        vec[i * (s + 1) + a + b] = coeff.clone();
                    }
                }
                old.insert(&vec);
            }
        }
        let kernel = kernel_basis(&relation_map(ctx, &generators, s));
        for r in 0..kernel.rows() {
            let row = kernel.row(r);
            if old.insert(row) {
                let col = (0..d)
                    .map(|i| BinaryForm::new(row[i * (s + 1)..(i + 1) * (s + 1)].to_vec()))
                    .collect();
                found.push((s, col));
            }
        }
    }
    found.sort_by(|a, b| b.0.cmp(&a.0));
    let col_degrees = Partition::new(found.iter().map(|(deg, _)| *deg).collect())?;
    let columns = found.into_iter().map(|(_, col)| col).collect();
    Ok(MuBasis {
        j,
        generators,
        columns,
        col_degrees,
        gcd,
    })
}

/// Column degrees read off the relation module; an independent route to the
/// degrees predicted by the Hilbert function.
pub fn degrees_from_syzygy_oracle<F: Field>(v: &FormSpace<F>) -> Result<Partition> {
    Ok(mu_basis(v)?.col_degrees)
}

/// `(-1)^i det(M without row i)` for a `d × (d-1)` matrix given by rows.
///
/// Each column must be homogeneous. Determinants of all leading column blocks
/// are built up over row subsets, so the cost is `O(2^d · d)` products.
pub fn signed_minors<R: Ring>(ctx: R::Ctx, rows: &[Vec<BinaryForm<R>>]) -> Vec<BinaryForm<R>> {
    let d = rows.len();
    let cols = d.saturating_sub(1);
    assert!(rows.iter().all(|r| r.len() == cols), "matrix must be d × (d-1)");
    assert!(d < 32, "too many rows");
    let mut layer: Vec<(u32, BinaryForm<R>)> = vec![(0, BinaryForm::one(ctx))];
    for k in 0..cols {
        let mut next: Vec<Option<BinaryForm<R>>> = vec![None; 1 << d];
        for (mask, det) in &layer {
            for r in 0..d {
                if mask & (1 << r) != 0 {
                    continue;
                }
                let entry = &rows[r][k];
                let full = mask | (1 << r);
                let pos = (full & ((1 << r) - 1)).count_ones() as usize;
                let mut term = entry.mul(det);
                if (pos + k) % 2 == 1 {
                    term = term.neg();
                }
                let slot = &mut next[full as usize];
                *slot = Some(match slot.take() {
                    Some(acc) => acc.add(&term),
                    None => term,
                });
            }
        }
        layer = next
            .into_iter()
            .enumerate()
            .filter_map(|(m, f)| f.map(|f| (m as u32, f)))
            .collect();
    }
    let all = (1u32 << d) - 1;
    (0..d)
        .map(|i| {
            let target = all & !(1 << i);
            let det = layer
                .iter()
                .find(|(m, _)| *m == target)
                .map(|(_, f)| f.clone())
                .expect("every row subset of size d-1 is reached");
            if i % 2 == 1 {
                det.neg()
            } else {
                det
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{hilbert_tail, lambda_of, relation_degrees};
    use crate::linalg::{Fp, Modulus, Rational};

    fn mono(j: usize, ys: &[usize]) -> FormSpace<Rational> {
        let forms: Vec<_> = ys.iter().map(|&b| BinaryForm::monomial((), j, b)).collect();
        FormSpace::from_forms(j, &forms).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn monomial_relations() {
        let v = mono(6, &[0, 1, 6]);
        let mu = mu_basis(&v).unwrap();
        assert_eq!(mu.col_degrees(), &p(&[5, 1]));
        let lin = &mu.columns()[1];
        let y = BinaryForm::<Rational>::monomial((), 1, 1);
        let x = BinaryForm::<Rational>::monomial((), 1, 0);
        let scale = lin[0].coeffs()[1].clone();
        let expect = [y.scale(&scale), x.scale(&scale).neg(), BinaryForm::zero((), 1)];
        assert_eq!(lin.as_slice(), &expect);
        assert!(mu.regenerates(&v));
        assert_eq!(degrees_from_syzygy_oracle(&mono(6, &[0, 3, 6])).unwrap(), p(&[3, 3]));
    }

    #[test]
    fn relations_ignore_common_factor() {
        let v = mono(3, &[0, 1, 2]);
        let mu = mu_basis(&v).unwrap();
        assert_eq!(mu.col_degrees(), &p(&[1, 1]));
        assert_eq!(mu.gcd(), &BinaryForm::monomial((), 1, 0));
        assert!(mu.regenerates(&v));
    }

    #[test]
    fn koszul_minors() {
        let f = |c: &[i64]| BinaryForm::<Rational>::from_i64s((), c);
        let rows = vec![
            vec![f(&[0, 1]), f(&[0, 0])],
            vec![f(&[-1, 0]), f(&[0, 1])],
            vec![f(&[0, 0]), f(&[-1, 0])],
        ];
        let minors = signed_minors((), &rows);
        assert_eq!(FormSpace::span((), 2, &minors), FormSpace::full((), 2));
    }

    #[test]
    fn minors_of_one_row() {
        let minors = signed_minors::<Rational>((), &[vec![]]);
        assert_eq!(minors, vec![BinaryForm::one(())]);
    }

    #[test]
    fn random_spaces_agree_with_hilbert_function() {
        use rand::SeedableRng;
        let m = Modulus::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (j, d) in [(6, 3), (8, 3), (9, 4), (5, 2), (7, 5)] {
            for _ in 0..20 {
                let forms: Vec<_> = (0..d)
                    .map(|_| BinaryForm::new((0..=j).map(|_| Fp::random(m, &mut rng)).collect()))
                    .collect();
                let Ok(v) = FormSpace::from_forms(j, &forms) else { continue };
                let (lambda, _) = lambda_of(&hilbert_tail(&v).unwrap());
                let mu = mu_basis(&v).unwrap();
                assert_eq!(mu.col_degrees(), &relation_degrees(&lambda, d).unwrap());
                assert!(mu.regenerates(&v));
            }
        }
    }
}
