//! Dense univariate polynomials, ascending coefficients, used for the
//! dehomogenized gcd and for root finding.

use crate::linalg::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        Poly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: F::Ctx) -> Self {
        Poly::new(ctx, vec![F::one(ctx)])
    }

    /// `t + a`
    pub fn linear(a: F) -> Self {
        let ctx = a.ctx();
        Poly::new(ctx, vec![a, F::one(ctx)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                Poly::new(self.ctx, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = F::zero(self.ctx);
        Poly::new(
            self.ctx,
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&z)
                        .sub(rhs.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ctx);
        }
        let mut out = vec![F::zero(self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[i + k] = out[i + k].add(&a.mul(b));
            }
        }
        Poly::new(self.ctx, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by zero polynomial");
        let inv = rhs.coeffs[db].inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return (Poly::zero(self.ctx), Poly::zero(self.ctx));
        };
        if da < db {
            return (Poly::zero(self.ctx), self.clone());
        }
        let mut quot = vec![F::zero(self.ctx); da - db + 1];
        for k in (0..=da - db).rev() {
            let f = rem[k + db].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for (i, b) in rhs.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&f.mul(b));
            }
            quot[k] = f;
        }
        (Poly::new(self.ctx, quot), Poly::new(self.ctx, rem))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.div_rem(rhs).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.ctx).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, t: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(self.ctx), |acc, c| acc.mul(t).add(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn p(xs: &[i64]) -> Poly<Rational> {
        Poly::new((), xs.iter().map(|&x| Rational::from_i64((), x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (t - 1)(t + 2) and (t - 1)(t - 3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, 0, 3, 1]);
        let b = p(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b).sub(&p(&[])).sub(&r.mul(&p(&[-1])));
        assert_eq!(back, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}
