use std::fmt;

use super::univariate::Poly;
use crate::linalg::{Field, Ring};

/// A homogeneous polynomial in `x, y`.
///
/// `coeffs[i]` multiplies `x^(degree - i) * y^i`. The zero form keeps its
/// nominal degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> BinaryForm<R> {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a form of degree n has n + 1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn zero(ctx: R::Ctx, degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![R::zero(ctx); degree + 1],
        }
    }

    pub fn one(ctx: R::Ctx) -> Self {
        BinaryForm {
            coeffs: vec![R::one(ctx)],
        }
    }

    /// `x^(degree - y_power) * y^y_power`
    pub fn monomial(ctx: R::Ctx, degree: usize, y_power: usize) -> Self {
        let mut f = Self::zero(ctx, degree);
        f.coeffs[y_power] = R::one(ctx);
        f
    }

    pub fn from_i64s(ctx: R::Ctx, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(ctx, c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn ctx(&self) -> R::Ctx {
        self.coeffs[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degree");
        Self::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "subtracting forms of different degree");
        Self::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Ring::neg).collect())
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let ctx = self.ctx();
        let mut out = vec![R::zero(ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + k] = out[i + k].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    /// Multiplication by `x^x_power * y^y_power`.
    pub fn mul_monomial(&self, x_power: usize, y_power: usize) -> Self {
        let ctx = self.ctx();
        let mut out = vec![R::zero(ctx); self.coeffs.len() + x_power + y_power];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + y_power] = c.clone();
        }
        Self::new(out)
    }

    /// Largest `k` with `x^k | f` (the degree, for the zero form).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count().min(self.degree())
    }

    /// Largest `k` with `y^k | f` (the degree, for the zero form).
    pub fn y_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.degree())
    }
}

impl<F: Field> BinaryForm<F> {
    /// Dehomogenization at `x = 1`, as a polynomial in `t = y/x`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.ctx(), self.coeffs.clone())
    }

    /// Homogenization of `p` in degree `degree >= deg p`.
    pub fn homogenize(p: &Poly<F>, degree: usize, ctx: F::Ctx) -> Self {
        let mut f = Self::zero(ctx, degree);
        for (i, c) in p.coeffs().iter().enumerate() {
            assert!(i <= degree, "polynomial degree exceeds target degree");
            f.coeffs[i] = c.clone();
        }
        f
    }

    /// `self / g` when `g` divides `self` exactly.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        if g.is_zero() || g.degree() > self.degree() {
            return None;
        }
        let ctx = self.ctx();
        let n = self.degree() - g.degree();
        if self.is_zero() {
            return Some(Self::zero(ctx, n));
        }
        // power-series division in y/x starting from the lowest y-power of g
        let a = g.y_valuation();
        if self.coeffs[..a].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let lead_inv = g.coeffs[a].inv().expect("nonzero");
        let mut rem: Vec<F> = self.coeffs.clone();
        let mut q = vec![F::zero(ctx); n + 1];
        for k in 0..=n {
            let f = rem[k + a].mul(&lead_inv);
            if f.is_zero() {
                continue;
            }
            for (i, b) in g.coeffs.iter().enumerate().skip(a) {
                if !b.is_zero() {
                    rem[k + i] = rem[k + i].sub(&f.mul(b));
                }
            }
            q[k] = f;
        }
        rem.iter().all(Ring::is_zero).then(|| Self::new(q))
    }

    /// Scales so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.inv().expect("nonzero")),
        }
    }

    /// Monic gcd of a list of nonzero forms.
    ///
    /// The common power of `x` is split off first; the cofactors are then
    /// dehomogenized at `x = 1`, combined by Euclid, and homogenized again.
    /// At least one cofactor is prime to `x`, so no factor is lost.
    pub fn gcd_of(forms: &[Self]) -> Option<Self> {
        let first = forms.iter().find(|f| !f.is_zero())?;
        let ctx = first.ctx();
        let nonzero: Vec<&Self> = forms.iter().filter(|f| !f.is_zero()).collect();
        let vx = nonzero.iter().map(|f| f.x_valuation()).min().unwrap_or(0);
        let mut g = Poly::zero(ctx);
        for f in &nonzero {
            let cof = Poly::new(ctx, f.coeffs[..=f.degree() - vx].to_vec());
            g = g.gcd(&cof);
            if g.degree() == Some(0) {
                break;
            }
        }
        let deg = g.degree().unwrap_or(0);
        Some(Self::homogenize(&g, deg, ctx).mul_monomial(vx, 0))
    }
}

impl<R: Ring> fmt::Debug for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Ring> fmt::Display for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (n - i, i) {
                (0, 0) => String::new(),
                (a, 0) => pow("x", a),
                (0, b) => pow("y", b),
                (a, b) => format!("{}*{}", pow("x", a), pow("y", b)),
            };
            terms.push(match (c.is_one(), mono.is_empty()) {
                (_, true) => c.to_string(),
                (true, false) => mono,
                (false, false) => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn pow(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn q(c: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::from_i64s((), c)
    }

    #[test]
    fn product_and_exact_division() {
        // (x + y)(x - 2y) = x^2 - xy - 2y^2
        let a = q(&[1, 1]);
        let b = q(&[1, -2]);
        let ab = a.mul(&b);
        assert_eq!(ab, q(&[1, -1, -2]));
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(q(&[1, 0, 1]).div_exact(&a), None);
        // division by y
        let y = q(&[0, 1]);
        assert_eq!(ab.mul(&y).div_exact(&y), Some(ab));
    }

    #[test]
    fn valuations() {
        let f = q(&[0, 0, 3, 0]); // 3 x y^2
        assert_eq!(f.x_valuation(), 1);
        assert_eq!(f.y_valuation(), 2);
    }

    #[test]
    fn gcd_keeps_x_factors() {
        // x * (x^5, x^2 y^3, y^5)
        let x = q(&[1, 0]);
        let fs = [
            BinaryForm::monomial((), 5, 0).mul(&x),
            BinaryForm::monomial((), 5, 3).mul(&x),
            BinaryForm::monomial((), 5, 5).mul(&x),
        ];
        assert_eq!(BinaryForm::gcd_of(&fs).unwrap(), x);
        let coprime: [BinaryForm<Rational>; 2] = [BinaryForm::monomial((), 6, 0), BinaryForm::monomial((), 6, 6)];
        assert_eq!(BinaryForm::gcd_of(&coprime).unwrap().degree(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(q(&[1, -1, 0, 2]).to_string(), "x^3 + -1*x^2*y + 2*y^3");
    }
}
