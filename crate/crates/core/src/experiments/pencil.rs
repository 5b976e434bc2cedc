use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::FormSpace;
use crate::invariants::{hilbert_tail, HilbertTail};
use crate::linalg::{Fp, Ring};

use super::rng::stream_rng;

/// Tails along the line `V(t) = span(f_i + t g_i)` through a special member.
#[derive(Clone, Debug, Serialize)]
pub struct PencilReport {
    pub t_samples: Vec<u32>,
    /// Termwise minimum over the sampled `t`.
    pub generic: HilbertTail,
    /// Tail at `t = 0`.
    pub special: HilbertTail,
}

impl PencilReport {
    /// Upper semicontinuity of the tail at the special member.
    pub fn holds(&self) -> bool {
        self.special.termwise_ge(&self.generic)
    }
}

pub fn pencil_limit(
    special: &FormSpace<Fp>,
    direction: &FormSpace<Fp>,
    seed: u64,
    n_samples: usize,
) -> Result<PencilReport> {
    if special.j() != direction.j() || special.dim() != direction.dim() {
        return Err(Error::Inconsistent("pencil ends live in different Grassmannians".into()));
    }
    let m = special.ctx();
    let (f, g) = (special.forms(), direction.forms());
    let mut rng = stream_rng(seed, 0);
    let mut t_samples = Vec::new();
    let mut tails = Vec::new();
    while tails.len() < n_samples.max(1) {
        let t = Fp::random(m, &mut rng);
        if t.is_zero() {
            continue;
        }
        let forms: Vec<_> = f.iter().zip(&g).map(|(a, b)| a.add(&b.scale(&t))).collect();
        let Ok(v) = FormSpace::from_forms(special.j(), &forms) else {
            continue;
        };
        t_samples.push(t.value());
        tails.push(hilbert_tail(&v)?);
    }
    Ok(PencilReport {
        t_samples,
        generic: HilbertTail::termwise_min(&tails),
        special: hilbert_tail(special)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{random_space, sample_hilbert_burch};
    use crate::linalg::Modulus;
    use crate::partition::Partition;

    #[test]
    fn special_member_is_more_special() {
        let m = Modulus::default();
        let v0 = sample_hilbert_burch(6, 3, &Partition::new(vec![4, 2]).unwrap(), 0, 3, m).unwrap();
        let v1 = random_space(m, 6, 3, &mut stream_rng(4, 0));
        let r = pencil_limit(&v0.space, &v1, 5, 5).unwrap();
        assert_eq!(r.generic.values(), &[4, 2, 0]);
        assert_eq!(r.special.values(), &[4, 2, 1, 0]);
        assert!(r.holds());

        let same = pencil_limit(&v0.space, &v0.space, 5, 3).unwrap();
        assert_eq!(same.generic, same.special);

        let v2 = sample_hilbert_burch(6, 3, &Partition::new(vec![2, 2]).unwrap(), 2, 3, m).unwrap();
        let r = pencil_limit(&v2.space, &v1, 6, 5).unwrap();
        assert_eq!(r.generic.values(), &[4, 2, 0]);
        assert!(r.holds());
    }
}
