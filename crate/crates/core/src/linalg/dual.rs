//! First-order dual numbers `a + b·ε` with `ε² = 0`.
//!
//! Evaluating a polynomial map on duals whose tangent is the unit vector in
//! one coordinate yields the corresponding column of the Jacobian.

use std::fmt;

use super::field::{Field, Ring};
use super::matrix::{rank, Matrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dual<F: Ring> {
    pub primal: F,
    pub tangent: F,
}

impl<F: Ring> Dual<F> {
    pub fn new(primal: F, tangent: F) -> Self {
        Dual { primal, tangent }
    }

    /// A constant: zero tangent.
    pub fn constant(primal: F) -> Self {
        let t = F::zero(primal.ctx());
        Dual { primal, tangent: t }
    }

    /// A seeded variable: unit tangent.
    pub fn variable(primal: F) -> Self {
        let t = F::one(primal.ctx());
        Dual { primal, tangent: t }
    }
}

impl<F: Ring> fmt::Debug for Dual<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}e", self.primal, self.tangent)
    }
}

impl<F: Ring> fmt::Display for Dual<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<F: Ring> Ring for Dual<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.primal.ctx()
    }

    fn zero(ctx: F::Ctx) -> Self {
        Dual::constant(F::zero(ctx))
    }

    fn one(ctx: F::Ctx) -> Self {
        Dual::constant(F::one(ctx))
    }

    fn from_i64(ctx: F::Ctx, v: i64) -> Self {
        Dual::constant(F::from_i64(ctx, v))
    }

    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.tangent.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Dual::new(self.primal.add(&rhs.primal), self.tangent.add(&rhs.tangent))
    }

    fn sub(&self, rhs: &Self) -> Self {
        Dual::new(self.primal.sub(&rhs.primal), self.tangent.sub(&rhs.tangent))
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a + bε)(c + dε) = ac + (ad + bc)ε
        Dual::new(
            self.primal.mul(&rhs.primal),
            self.primal
                .mul(&rhs.tangent)
                .add(&self.tangent.mul(&rhs.primal)),
        )
    }

    fn neg(&self) -> Self {
        Dual::new(self.primal.neg(), self.tangent.neg())
    }
}

/// Rank of the primal part of a grid of duals.
pub fn rank_with_duals<F: Field>(ctx: F::Ctx, grid: &[Vec<Dual<F>>]) -> usize {
    let cols = grid.first().map_or(0, Vec::len);
    let m = Matrix::from_rows(
        ctx,
        cols,
        grid.iter()
            .map(|row| row.iter().map(|x| x.primal.clone()).collect())
            .collect(),
    );
    rank(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{Fp, Modulus};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn epsilon_squared_vanishes() {
        let p = Modulus::default();
        let e = Dual::new(Fp::zero(p), Fp::one(p));
        assert!(e.mul(&e).is_zero());
    }

    #[test]
    fn product_rule() {
        let p = Modulus::default();
        // d/dx (x^3) at x = 5 is 75
        let x = Dual::variable(Fp::new(p, 5));
        let y = x.mul(&x).mul(&x);
        assert_eq!(y.primal.value(), 125);
        assert_eq!(y.tangent.value(), 75);
    }

    #[test]
    fn rank_of_dual_grids() {
        let p = Modulus::default();
        let zero = vec![vec![Dual::<Fp>::zero(p); 3]; 3];
        assert_eq!(rank_with_duals(p, &zero), 0);
        let mut id = zero.clone();
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = Dual::new(Fp::one(p), Fp::new(p, 7));
        }
        assert_eq!(rank_with_duals(p, &id), 3);
    }

    #[test]
    fn random_grid_is_full_rank() {
        let p = Modulus::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let g: Vec<Vec<Dual<Fp>>> = (0..4)
                .map(|_| {
                    (0..4)
                        .map(|_| Dual::new(Fp::random(p, &mut rng), Fp::random(p, &mut rng)))
                        .collect()
                })
                .collect();
            assert_eq!(rank_with_duals(p, &g), 4);
        }
    }
}
