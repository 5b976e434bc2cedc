use hstrata::experiments::{random_space, sample_hilbert_burch, stream_rng};
use hstrata::invariants::{degrees_from_syzygy_oracle, hilbert_tail, lambda_of, nose, relation_degrees, tau};
use hstrata::linalg::Modulus;
use hstrata::partition::enumerate_partitions;
use hstrata::strata::{strata, tail_from_lambda};
use proptest::prelude::*;

fn grid() -> impl Strategy<Value = (usize, usize)> {
    (2usize..11).prop_flat_map(|j| (Just(j), 1..=j + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tail_and_lambda_are_inverse((j, d) in grid(), pick in 0usize..1000) {
        let all = strata(j, d);
        let s = &all[pick % all.len()];
        let (lambda, c) = lambda_of(&s.tail);
        prop_assert_eq!(&lambda, &s.lambda);
        prop_assert_eq!(c, s.c);
        prop_assert_eq!(tail_from_lambda(&lambda, c, j, d).unwrap(), s.tail.clone());
    }

    #[test]
    fn random_spaces_satisfy_invariants((j, d) in grid(), seed in any::<u64>()) {
        let m = Modulus::new(10007).unwrap();
        let v = random_space(m, j, d, &mut stream_rng(seed, 0));
        let tail = hilbert_tail(&v).unwrap();
        let t = tau(&v);
        prop_assert!(t >= 1 && t <= d.min(j + 2 - d));
        prop_assert_eq!(t, tail.tau());
        let (lambda, c) = lambda_of(&tail);
        prop_assert_eq!(v.gcd_form().unwrap().1, c);
        prop_assert_eq!(degrees_from_syzygy_oracle(&v).unwrap(), relation_degrees(&lambda, d).unwrap());
        let n = nose(&v);
        prop_assert_eq!(n.scroll.size(), d);
        prop_assert_eq!(n.scroll.len(), t);
        for i in 1..n.function.len() - 1 {
            let e_prev = n.function[i - 1] as i64 - if i >= 2 { n.function[i - 2] as i64 } else { 0 };
            let e_here = n.function[i] as i64 - n.function[i - 1] as i64;
            prop_assert!(e_here <= e_prev, "nose increments must not increase: {:?}", n.function);
        }
    }

    #[test]
    fn samples_land_in_their_stratum((j, d) in grid(), pick in 0usize..1000, seed in any::<u64>()) {
        let all = strata(j, d);
        let s = &all[pick % all.len()];
        let sample = sample_hilbert_burch(j, d, &s.relation_degrees, s.c, seed, Modulus::default()).unwrap();
        prop_assert_eq!(&sample.tail, &s.tail);
        prop_assert_eq!(degrees_from_syzygy_oracle(&sample.space).unwrap(), s.relation_degrees.clone());
    }

    #[test]
    fn tail_order_is_dominance((j, d) in grid(), a in 0usize..500, b in 0usize..500) {
        // d = 1 has no gcd-free stratum
        prop_assume!(d >= 2);
        let lambdas = enumerate_partitions(j + 1 - d, d - 1, false);
        let (x, y) = (&lambdas[a % lambdas.len()], &lambdas[b % lambdas.len()]);
        let tx = tail_from_lambda(x, 0, j, d).unwrap();
        let ty = tail_from_lambda(y, 0, j, d).unwrap();
        prop_assert_eq!(ty.termwise_ge(&tx), x.bruhat_leq(y).unwrap());
    }
}
