//! Exact scalar arithmetic.
//!
//! Two coefficient fields are supported: the rationals ([`Rational`], backed by
//! arbitrary-precision integers) and prime fields ([`Fp`], a residue carrying
//! its modulus). Generic code is written against [`Ring`] / [`Field`]; each
//! element knows its own context so that zeros and ones can be produced
//! without a separate field handle.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// The default prime, 2^31 - 1.
pub const DEFAULT_PRIME: u32 = 2_147_483_647;

/// Commutative ring arithmetic by reference.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    /// Data needed to build constants (the modulus, for prime fields).
    type Ctx: Copy + Eq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_i64(ctx: Self::Ctx, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one(self.ctx())
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

/// Which coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(Modulus),
}

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Prime from `HSTRATA_PRIME` if set, otherwise [`DEFAULT_PRIME`].
    pub fn from_env() -> Result<Self> {
        match std::env::var("HSTRATA_PRIME") {
            Ok(s) => {
                let p: u64 = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("HSTRATA_PRIME={s:?} is not an integer")))?;
                let p = u32::try_from(p).map_err(|_| Error::NotPrime(p))?;
                Modulus::new(p)
            }
            Err(_) => Ok(Modulus::default()),
        }
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus(DEFAULT_PRIME)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut q = 3u32;
    while (q as u64) * (q as u64) <= p as u64 {
        if p % q == 0 {
            return false;
        }
        q += 2;
    }
    true
}

/// A residue modulo a prime, `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: Modulus,
}

impl Fp {
    pub fn new(modulus: Modulus, value: u64) -> Self {
        Fp {
            value: (value % modulus.0 as u64) as u32,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn random<R: Rng + ?Sized>(modulus: Modulus, rng: &mut R) -> Self {
        Fp {
            value: rng.gen_range(0..modulus.0),
            modulus,
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    type Ctx = Modulus;

    #[inline]
    fn ctx(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    fn zero(ctx: Modulus) -> Self {
        Fp { value: 0, modulus: ctx }
    }

    #[inline]
    fn one(ctx: Modulus) -> Self {
        Fp { value: 1, modulus: ctx }
    }

    fn from_i64(ctx: Modulus, v: i64) -> Self {
        let p = ctx.0 as i64;
        Fp {
            value: v.rem_euclid(p) as u32,
            modulus: ctx,
        }
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0 as u64;
        let s = self.value as u64 + rhs.value as u64;
        Fp {
            value: if s >= p { (s - p) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }

    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            (self.value as u64 + self.modulus.0 as u64 - rhs.value as u64) as u32
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus.0 as u64) as u32,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.modulus.0 - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.modulus.0 as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp::from_i64(self.modulus, t0))
    }
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_big(value: BigRational) -> Self {
        Rational(value)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Ring for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: ()) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: ()) -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(_: (), v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_rejects_composites() {
        assert!(Modulus::new(2_147_483_647).is_ok());
        assert!(Modulus::new(7).is_ok());
        assert!(Modulus::new(2).is_ok());
        assert!(Modulus::new(1).is_err());
        assert!(Modulus::new(91).is_err());
    }

    #[test]
    fn fp_inverse_roundtrip() {
        let m = Modulus::default();
        for v in [1u64, 2, 3, 12345, 2_147_483_646] {
            let a = Fp::new(m, v);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert!(Fp::zero(m).inv().is_none());
    }

    #[test]
    fn fp_negative_reduction() {
        let m = Modulus::new(7).unwrap();
        assert_eq!(Fp::from_i64(m, -1).value(), 6);
        assert_eq!(Fp::new(m, 3).sub(&Fp::new(m, 5)).value(), 5);
        assert_eq!(Fp::new(m, 3).neg().value(), 4);
    }

    #[test]
    fn rational_lowest_terms() {
        let a = Rational::parse("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert!(a.denom() > &BigInt::zero());
        assert_eq!(Rational::parse("5").unwrap().to_string(), "5");
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("x").is_err());
    }
}
