//! Linear factors of binary forms over a prime field.

use rand::Rng;

use super::form::BinaryForm;
use super::univariate::Poly;
use crate::linalg::{Fp, Ring};

/// All linear factors of `f` over `F_p`, with multiplicity.
///
/// Powers of `x` come first; every other factor is returned as `y - r·x`.
/// Irreducible factors of higher degree are not reported.
pub fn linear_factors<R: Rng + ?Sized>(f: &BinaryForm<Fp>, rng: &mut R) -> Vec<BinaryForm<Fp>> {
    if f.is_zero() {
        return Vec::new();
    }
    let m = f.ctx();
    let x = BinaryForm::new(vec![Fp::one(m), Fp::zero(m)]);
    let vx = f.x_valuation();
    let mut out = vec![x; vx];
    let mut poly = Poly::new(m, f.coeffs()[..=f.degree() - vx].to_vec());
    for r in roots(&poly, rng) {
        let lin = Poly::linear(r.neg());
        loop {
            let (q, rem) = poly.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            poly = q;
            out.push(BinaryForm::new(vec![r.neg(), Fp::one(m)]));
        }
    }
    out
}

/// Distinct roots in `F_p` of a nonzero polynomial.
pub fn roots<R: Rng + ?Sized>(p: &Poly<Fp>, rng: &mut R) -> Vec<Fp> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let m = p.coeffs()[0].modulus();
    let q = m.get() as u64;
    if q < 64 {
        return (0..q)
            .map(|v| Fp::new(m, v))
            .filter(|t| p.eval(t).is_zero())
            .collect();
    }
    let t = Poly::new(m, vec![Fp::zero(m), Fp::one(m)]);
    let split = p.gcd(&t.pow_mod(q, p).sub(&t));
    let mut found = Vec::new();
    equal_degree_split(&split, q, rng, &mut found);
    found.sort_by_key(|r| r.value());
    found
}

fn equal_degree_split<R: Rng + ?Sized>(p: &Poly<Fp>, q: u64, rng: &mut R, out: &mut Vec<Fp>) {
    match p.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = p.monic();
            out.push(c.coeffs()[0].neg());
        }
        Some(_) => {
            let m = p.coeffs()[0].modulus();
            loop {
                let a = Fp::random(m, rng);
                let h = Poly::linear(a)
                    .pow_mod((q - 1) / 2, p)
                    .sub(&Poly::one(m));
                let g = p.gcd(&h);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && Some(dg) < p.degree() {
                    let (other, _) = p.div_rem(&g);
                    equal_degree_split(&g, q, rng, out);
                    equal_degree_split(&other, q, rng, out);
                    return;
                }
            }
        }
    }
}
