use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::roots::linear_factors;
use crate::forms::{BinaryForm, FormSpace};
use crate::invariants::{hilbert_tail, HilbertTail};
use crate::linalg::Fp;

use super::rng::{random_element, random_form, stream_rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificationOutcome {
    Success,
    /// `R_1 · I_{degree-1}` already exceeds the target dimension. The
    /// overflow is `certified` when `R_{degree-j} · V` alone exceeds it, so
    /// no choice of earlier generators could have avoided it.
    Overflow { degree: usize, certified: bool },
    RetriesExhausted,
}

/// Record of an attempt to grow `(V)` into a graded ideal with a prescribed
/// Hilbert tail.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureCertificate {
    pub special_tail: HilbertTail,
    pub target: HilbertTail,
    pub outcome: CertificationOutcome,
    /// Minimal generators added in degrees `j+1, j+2, ...` by the last attempt.
    pub added: Vec<usize>,
    pub attempts: usize,
}

impl ClosureCertificate {
    pub fn succeeded(&self) -> bool {
        self.outcome == CertificationOutcome::Success
    }
}

/// Tries to build a graded ideal `I` with `I_j = V` and `H(R/I)_{≥j}` equal
/// to `target`, degree by degree.
///
/// When the target has a common factor of degree `c`, a degree-`c` divisor
/// `g` of the gcd of `V` (a product of its linear factors) is split off and
/// the construction runs on `V / g` with a base-point-free target. In each
/// degree the forced part `R_1 · I_{i-1}` is completed to the required
/// dimension one generator at a time, preferring generators that enlarge
/// `R_1 · I_i` by 0, then 1, then 2 dimensions.
pub fn certify_closure_membership(
    v: &FormSpace<Fp>,
    target: &HilbertTail,
    seed: u64,
    retries: usize,
) -> Result<ClosureCertificate> {
    let special_tail = hilbert_tail(v)?;
    if target.j() != v.j() || target.d() != v.dim() {
        return Err(Error::InvalidTail(format!(
            "target {target} does not belong to Grass(R_{}, {})",
            v.j(),
            v.dim()
        )));
    }
    let mut last = CertificationOutcome::RetriesExhausted;
    let mut added = Vec::new();
    for attempt in 1..=retries.max(1) {
        let mut rng = stream_rng(seed, attempt as u64);
        let (outcome, counts) = attempt_once(v, target, &mut rng)?;
        added = counts;
        match outcome {
            CertificationOutcome::Success | CertificationOutcome::Overflow { certified: true, .. } => {
                return Ok(ClosureCertificate {
                    special_tail,
                    target: target.clone(),
                    outcome,
                    added,
                    attempts: attempt,
                });
            }
            other => last = other,
        }
    }
    let outcome = match last {
        CertificationOutcome::Overflow { .. } => last,
        _ => CertificationOutcome::RetriesExhausted,
    };
    Ok(ClosureCertificate {
        special_tail,
        target: target.clone(),
        outcome,
        added,
        attempts: retries.max(1),
    })
}

fn attempt_once<R: Rng + ?Sized>(
    v: &FormSpace<Fp>,
    target: &HilbertTail,
    rng: &mut R,
) -> Result<(CertificationOutcome, Vec<usize>)> {
    let j = v.j();
    let c = target.c();
    let (gcd, c_v) = v.gcd_form().expect("nonzero space");
    // shift = degree of the split-off factor
    let (base, shift) = if c == 0 || c > c_v {
        (v.clone(), 0)
    } else if c == c_v {
        (v.divide_by(&gcd).expect("gcd divides"), c)
    } else {
        let mut factors = linear_factors(&gcd, rng);
        if factors.len() < c {
            return Err(Error::SamplingExhausted {
                attempts: 1,
                reason: format!("common factor of degree {c_v} has fewer than {c} linear factors"),
            });
        }
        factors.shuffle(rng);
        let g = factors[..c].iter().fold(BinaryForm::one(v.ctx()), |acc, f| acc.mul(f));
        (v.divide_by(&g).expect("factor of the gcd divides"), c)
    };
    let reduced_target = |i: usize| target.value_at(i + shift) - shift;
    let stable = c - shift;
    let cap = 2 * j + 2 + target.values().len();
    let mut counts = Vec::new();
    let mut w = base.clone();
    for i in base.j() + 1..=cap {
        let required = i + 1 - reduced_target(i);
        let forced = w.product_space(1);
        if forced.dim() > required {
            let certified = base.product_space(i - base.j()).dim() > required;
            let outcome = CertificationOutcome::Overflow {
                degree: i + shift,
                certified,
            };
            return Ok((outcome, counts));
        }
        let before = forced.dim();
        w = complete(forced, required, rng);
        counts.push(w.dim() - before);
        if reduced_target(i) == stable && stable == 0 {
            return Ok((CertificationOutcome::Success, counts));
        }
    }
    Ok((CertificationOutcome::RetriesExhausted, counts))
}

/// Enlarges `w` to dimension `required`, each new generator chosen to keep
/// `R_1 · w` as small as possible.
fn complete<R: Rng + ?Sized>(
    mut w: FormSpace<Fp>,
    required: usize,
    rng: &mut R,
) -> FormSpace<Fp> {
    let m = w.ctx();
    while w.dim() < required {
        let up = w.product_space(1);
        let free = up.colon_space(1);
        let mut candidate = if free.dim() > w.dim() {
            pick_outside(&free, &w, rng)
        } else {
            None
        };
        if candidate.is_none() {
            let mut divisors: Vec<BinaryForm<Fp>> = match w.gcd_form() {
                Some((g, deg)) if deg > 0 => linear_factors(&g, rng),
                _ => Vec::new(),
            };
            divisors.push(random_form(m, 1, rng));
            for l in divisors {
                let cheap = up.colon_by_form(&l);
                if cheap.dim() > w.dim() {
                    candidate = pick_outside(&cheap, &w, rng);
                    if candidate.is_some() {
                        break;
                    }
                }
            }
        }
        let f = candidate.unwrap_or_else(|| loop {
            let f = random_form(m, w.j(), rng);
            if !w.contains(&f) {
                break f;
            }
        });
        w = w.sum(&FormSpace::span(m, w.j(), &[f]));
    }
    w
}

fn pick_outside<R: Rng + ?Sized>(
    space: &FormSpace<Fp>,
    w: &FormSpace<Fp>,
    rng: &mut R,
) -> Option<BinaryForm<Fp>> {
    (0..8).map(|_| random_element(space, rng)).find(|f| !w.contains(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::sample_hilbert_burch;
    use crate::linalg::Modulus;
    use crate::partition::Partition;

    fn t(v: &[usize]) -> HilbertTail {
        HilbertTail::new(6, v.to_vec()).unwrap()
    }

    fn sample(parts: &[usize], c: usize) -> FormSpace<Fp> {
        let degrees = Partition::new(parts.to_vec()).unwrap();
        sample_hilbert_burch(6, 3, &degrees, c, 11, Modulus::default()).unwrap().space
    }

    #[test]
    fn degenerates_to_general_tail() {
        let v = sample(&[4, 2], 0);
        let cert = certify_closure_membership(&v, &t(&[4, 2, 0]), 1, 10).unwrap();
        assert!(cert.succeeded(), "{cert:?}");
    }

    #[test]
    fn own_tail_needs_nothing_new() {
        let v = sample(&[4, 2], 0);
        let cert = certify_closure_membership(&v, &t(&[4, 2, 1, 0]), 1, 10).unwrap();
        assert!(cert.succeeded());
        assert!(cert.added.iter().all(|&n| n == 0), "{:?}", cert.added);
    }

    #[test]
    fn immediate_overflow() {
        let v = sample(&[3, 3], 0);
        let cert = certify_closure_membership(&v, &t(&[4, 3, 2, 1, 0]), 1, 10).unwrap();
        assert_eq!(
            cert.outcome,
            CertificationOutcome::Overflow {
                degree: 7,
                certified: true
            }
        );
    }

    #[test]
    fn base_points_are_kept() {
        let v = sample(&[2, 2], 2);
        assert!(certify_closure_membership(&v, &t(&[4, 2, 1]), 1, 10).unwrap().succeeded());
        assert!(certify_closure_membership(&v, &t(&[4, 2, 0]), 1, 10).unwrap().succeeded());
        assert!(!certify_closure_membership(&v, &t(&[4, 3]), 1, 10).unwrap().succeeded());
    }
}
