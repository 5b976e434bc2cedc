use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::FormSpace;
use crate::linalg::Field;
use crate::partition::Partition;

/// `h_j, h_{j+1}, ...` of `R/(V)`, stored up to the first value that repeats
/// forever (the base-point degree `c`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertTail {
    j: usize,
    values: Vec<usize>,
}

impl HilbertTail {
    /// Accepts any weakly decreasing sequence starting in degree `j`; trailing
    /// repeats are dropped.
    pub fn new(j: usize, mut values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidTail("empty tail".into()));
        }
        if values[0] > j + 1 {
            return Err(Error::InvalidTail(format!("h_j = {} exceeds j+1 = {}", values[0], j + 1)));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTail(format!("{values:?} increases")));
        }
        while values.len() > 1 && values[values.len() - 1] == values[values.len() - 2] {
            values.pop();
        }
        if let Some(k) = values.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::InvalidTail(format!(
                "{values:?} stalls at index {k} before stabilizing"
            )));
        }
        Ok(HilbertTail { j, values })
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// `j + 1 - h_j`
    pub fn d(&self) -> usize {
        self.j + 1 - self.values[0]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Stable value; the degree of the common factor.
    pub fn c(&self) -> usize {
        *self.values.last().unwrap()
    }

    /// `h_i` for `i >= j`.
    pub fn value_at(&self, i: usize) -> usize {
        assert!(i >= self.j, "degree {i} below j = {}", self.j);
        self.values.get(i - self.j).copied().unwrap_or(self.c())
    }

    /// `e_{j+1}, e_{j+2}, ...` up to the last nonzero difference.
    pub fn differences(&self) -> Vec<usize> {
        self.values.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn tau(&self) -> usize {
        1 + self.differences().first().copied().unwrap_or(0)
    }

    /// Admissibility for `Grass(R_j, d)`: differences weakly decreasing
    /// (from `e_j = d - 1`) and `1 <= tau <= min(d, j + 2 - d)`.
    pub fn is_admissible(&self) -> bool {
        let d = self.d();
        if d == 0 {
            return false;
        }
        let e = self.differences();
        let mut prev = d - 1;
        for &x in &e {
            if x > prev {
                return false;
            }
            prev = x;
        }
        let tau = self.tau();
        tau >= 1 && tau <= d.min(self.j + 2 - d)
    }

    /// Termwise `self >= other`, padding each with its stable value.
    pub fn termwise_ge(&self, other: &HilbertTail) -> bool {
        assert_eq!(self.j, other.j, "tails start in different degrees");
        let n = self.values.len().max(other.values.len());
        (0..n).all(|k| self.value_at(self.j + k) >= other.value_at(self.j + k))
    }

    /// Termwise minimum of a nonempty collection of tails with the same `j`.
    pub fn termwise_min<'a>(tails: impl IntoIterator<Item = &'a HilbertTail>) -> HilbertTail {
        let tails: Vec<&HilbertTail> = tails.into_iter().collect();
        let j = tails[0].j;
        let n = tails.iter().map(|t| t.values.len()).max().unwrap();
        let values = (0..n)
            .map(|k| tails.iter().map(|t| t.value_at(j + k)).min().unwrap())
            .collect();
        HilbertTail::new(j, values).expect("minimum of tails is a tail")
    }

    /// `1, 2, ..., j, h_j, h_{j+1}, ..., c`, indexed from degree 0.
    pub fn full_function(&self) -> Vec<usize> {
        (1..=self.j).chain(self.values.iter().copied()).collect()
    }
}

impl fmt::Display for HilbertTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Computes `h_i = (i+1) - dim R_{i-j} V` until two consecutive values agree.
pub fn hilbert_tail<F: Field>(v: &FormSpace<F>) -> Result<HilbertTail> {
    let j = v.j();
    if v.dim() == 0 {
        return Err(Error::InvalidDimension { j, d: 0 });
    }
    let cap = 2 * j + 2;
    let mut values = vec![j + 1 - v.dim()];
    let mut w = v.clone();
    loop {
        let i = w.j() + 1;
        if i > cap {
            return Err(Error::StabilizationCap { j, cap });
        }
        w = w.product_space(1);
        let h = i + 1 - w.dim();
        let last = *values.last().unwrap();
        if h == last {
            break;
        }
        values.push(h);
    }
    let tail = HilbertTail::new(j, values)?;
    debug_assert_eq!(tail.tau(), v.tau(), "tau must equal 1 + e_(j+1)");
    debug_assert!(tail.is_admissible(), "computed tail {tail} is not admissible");
    Ok(tail)
}

/// `dim R_1 V - dim V`, checked against its a priori bounds in debug builds.
pub fn tau<F: Field>(v: &FormSpace<F>) -> usize {
    let t = v.tau();
    let (j, d) = (v.j(), v.dim());
    debug_assert!(
        d == 0 || (1..=d.min(j + 2 - d)).contains(&t),
        "tau = {t} out of bounds for j = {j}, d = {d}"
    );
    t
}

/// The conjugate of the difference sequence, and the stable value.
pub fn lambda_of(tail: &HilbertTail) -> (Partition, usize) {
    let diffs = Partition::from_unsorted(tail.differences());
    (diffs.conjugate(), tail.c())
}

/// Column degrees `λ + 1` padded with ones to `d - 1` parts.
pub fn relation_degrees(lambda: &Partition, d: usize) -> Result<Partition> {
    if d == 0 || lambda.len() > d - 1 {
        return Err(Error::InvalidPartition(format!(
            "{lambda} has more than d - 1 = {} parts",
            d.saturating_sub(1)
        )));
    }
    let mut parts: Vec<usize> = lambda.parts().iter().map(|p| p + 1).collect();
    parts.resize(d - 1, 1);
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BinaryForm;
    use crate::linalg::Rational;

    fn mono(j: usize, ys: &[usize]) -> FormSpace<Rational> {
        let forms: Vec<_> = ys.iter().map(|&b| BinaryForm::monomial((), j, b)).collect();
        FormSpace::from_forms(j, &forms).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tails_of_monomial_spaces() {
        assert_eq!(hilbert_tail(&mono(6, &[0, 3, 6])).unwrap().values(), &[4, 2, 0]);
        assert_eq!(hilbert_tail(&mono(6, &[0, 1, 6])).unwrap().values(), &[4, 3, 2, 1, 0]);
        let full = FormSpace::<Rational>::full((), 5);
        assert_eq!(hilbert_tail(&full).unwrap().values(), &[0]);
    }

    #[test]
    fn tau_examples() {
        let x4 = BinaryForm::<Rational>::monomial((), 4, 0);
        assert_eq!(tau(&FormSpace::full((), 2).multiply_by(&x4)), 1);
        assert_eq!(tau(&mono(6, &[0, 1, 6])), 2);
        assert_eq!(tau(&mono(6, &[0, 3, 6])), 3);
    }

    #[test]
    fn lambda_examples() {
        let t = HilbertTail::new(6, vec![4, 2, 1, 0]).unwrap();
        assert_eq!(lambda_of(&t), (p(&[3, 1]), 0));
        let t = HilbertTail::new(8, vec![6, 4, 3, 2, 1, 1]).unwrap();
        assert_eq!(lambda_of(&t), (p(&[4, 1]), 1));
        let t = HilbertTail::new(6, vec![4, 4]).unwrap();
        assert_eq!(lambda_of(&t), (Partition::empty(), 4));
        assert_eq!(t.tau(), 1);
    }

    #[test]
    fn relation_degree_examples() {
        assert_eq!(relation_degrees(&p(&[2, 2]), 3).unwrap(), p(&[3, 3]));
        assert_eq!(relation_degrees(&p(&[4]), 3).unwrap(), p(&[5, 1]));
        assert_eq!(relation_degrees(&Partition::empty(), 3).unwrap(), p(&[1, 1]));
        assert!(relation_degrees(&p(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn tail_validation_and_order() {
        assert!(HilbertTail::new(6, vec![4, 5]).is_err());
        assert!(HilbertTail::new(6, vec![4, 2, 2, 1]).is_err());
        let a = HilbertTail::new(6, vec![4, 2, 1, 0]).unwrap();
        let b = HilbertTail::new(6, vec![4, 2, 0]).unwrap();
        assert!(a.termwise_ge(&b) && !b.termwise_ge(&a));
        assert_eq!(HilbertTail::termwise_min([&a, &b]), b);
        assert!(!HilbertTail::new(6, vec![4, 3, 1, 0]).unwrap().is_admissible());
        assert!(a.is_admissible());
        assert_eq!(a.full_function(), vec![1, 2, 3, 4, 5, 6, 4, 2, 1, 0]);
    }
}
