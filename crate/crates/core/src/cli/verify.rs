use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::experiments::{
    certify_closure_membership, derive_seed, jacobian_rank_dim, mu_family_closure_is_a_chain, mu_family_dims,
    pencil_limit, random_space, sample_hilbert_burch, stream_rng,
};
use crate::invariants::{hilbert_tail, lambda_of, mu_basis, nose, relation_degrees, tau};
use crate::linalg::Modulus;
use crate::partition::{enumerate_partitions, Partition};
use crate::strata::{
    cod_in_g, cod_tau, dim_gh, ell_partition, nose_strata, strata, tail_from_lambda, StrataPoset,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dims,
    Orders,
    Closure,
    Semicontinuity,
    Mu,
    Oracles,
    Formulas,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Orders => "orders",
            Suite::Closure => "closure",
            Suite::Semicontinuity => "semicontinuity",
            Suite::Mu => "mu",
            Suite::Oracles => "oracles",
            Suite::Formulas => "formulas",
        }
    }
}

/// Knobs shared by the suites; `None` picks the suite's default.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Restrict to one `(j, d)`; otherwise the suite's default grid.
    pub grid: Option<(usize, usize)>,
    pub max_j: Option<usize>,
    pub trials: Option<usize>,
    pub seeds: Option<usize>,
    pub seed: u64,
    pub modulus: Modulus,
}

impl VerifyOptions {
    fn grid_or(&self, default: &[(usize, usize)]) -> Vec<(usize, usize)> {
        match self.grid {
            Some(g) => vec![g],
            None => default.to_vec(),
        }
    }
}

/// Machine-readable outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Value>,
    pub details: Value,
}

impl SuiteSummary {
    fn new(suite: Suite, checks: usize, failures: Vec<Value>, details: Value) -> Self {
        SuiteSummary {
            suite: suite.name(),
            passed: failures.is_empty(),
            checks,
            failures,
            details,
        }
    }
}

const MAIN_GRID: [(usize, usize); 3] = [(6, 3), (8, 3), (9, 4)];
const SMALL_GRID: [(usize, usize); 2] = [(6, 3), (8, 3)];

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteSummary> {
    match suite {
        Suite::Dims => dims(opts),
        Suite::Orders => Ok(orders(opts)),
        Suite::Closure => closure(opts),
        Suite::Semicontinuity => semicontinuity(opts),
        Suite::Mu => Ok(mu(opts)),
        Suite::Oracles => oracles(opts),
        Suite::Formulas => Ok(formulas(opts)),
    }
}

/// Jacobian rank against `d(j+1) - cod` for every base-point-free stratum.
fn dims(opts: &VerifyOptions) -> Result<SuiteSummary> {
    let seeds = opts.seeds.unwrap_or(5);
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut ranks = BTreeMap::new();
    for (j, d) in opts.grid_or(&MAIN_GRID) {
        for s in strata(j, d).into_iter().filter(|s| s.c == 0) {
            let expected = d * (j + 1) - cod_in_g(&s.relation_degrees, 0, d);
            let mut seen = Vec::new();
            for k in 0..seeds as u64 {
                let r = jacobian_rank_dim(j, d, &s.relation_degrees, derive_seed(opts.seed, k), opts.modulus)?;
                checks += 1;
                if r != expected {
                    failures.push(json!({"j": j, "d": d, "D": s.relation_degrees, "seed": k, "rank": r, "expected": expected}));
                }
                seen.push(r);
            }
            ranks.insert(format!("({j},{d}) D={}", s.relation_degrees), json!({"ranks": seen, "expected": expected}));
        }
    }
    Ok(SuiteSummary::new(Suite::Dims, checks, failures, json!(ranks)))
}

/// Tail order, dominance on `λ`, reversed dominance on conjugates and
/// dominance on relation degrees agree on every pair.
fn orders(opts: &VerifyOptions) -> SuiteSummary {
    let max_j = opts.max_j.unwrap_or(12);
    let mut checks = 0;
    let mut failures = Vec::new();
    let grid: Vec<(usize, usize)> = match opts.grid {
        Some(g) => vec![g],
        None => (1..=max_j).flat_map(|j| (1..=j + 1).map(move |d| (j, d))).collect(),
    };
    for (j, d) in grid {
        let cod = j + 1 - d;
        let lambdas = enumerate_partitions(cod, d - 1, false);
        let tails: Vec<_> = lambdas.iter().map(|l| tail_from_lambda(l, 0, j, d).expect("valid")).collect();
        let degrees: Vec<_> = lambdas.iter().map(|l| relation_degrees(l, d).expect("valid")).collect();
        for a in 0..lambdas.len() {
            for b in 0..lambdas.len() {
                let by_tail = tails[b].termwise_ge(&tails[a]);
                let by_lambda = lambdas[a].bruhat_leq(&lambdas[b]).expect("same size");
                let by_conj = lambdas[b].conjugate().bruhat_leq(&lambdas[a].conjugate()).expect("same size");
                let by_degrees = degrees[a].bruhat_leq(&degrees[b]).expect("same size");
                checks += 1;
                if !(by_tail == by_lambda && by_lambda == by_conj && by_conj == by_degrees) {
                    failures.push(json!({
                        "j": j, "d": d, "lambda": lambdas[a], "other": lambdas[b],
                        "tail": by_tail, "lambda_order": by_lambda, "conjugate": by_conj, "degrees": by_degrees
                    }));
                }
            }
        }
    }
    let p = |v: Vec<usize>| Partition::new(v).expect("valid");
    let (x, y) = (p(vec![4, 1, 1]), p(vec![3, 3]));
    let tx = tail_from_lambda(&x, 0, 9, 4).expect("valid");
    let ty = tail_from_lambda(&y, 0, 9, 4).expect("valid");
    let incomparable = !x.bruhat_leq(&y).expect("same size")
        && !y.bruhat_leq(&x).expect("same size")
        && !tx.termwise_ge(&ty)
        && !ty.termwise_ge(&tx);
    checks += 1;
    if !incomparable {
        failures.push(json!({"incomparable_pair": [x, y]}));
    }
    SuiteSummary::new(
        Suite::Orders,
        checks,
        failures,
        json!({"max_j": max_j, "incomparable": {"lambda": [x, y], "tails": [tx, ty]}}),
    )
}

/// Dimension identities for every stratum with `j <= max_j`.
fn formulas(opts: &VerifyOptions) -> SuiteSummary {
    let max_j = opts.max_j.unwrap_or(12);
    let mut checks = 0;
    let mut failures = Vec::new();
    for j in 1..=max_j {
        for d in 1..=j + 1 {
            for s in strata(j, d) {
                let ambient = d * (j + 1 - d);
                let cod = cod_in_g(&s.relation_degrees, s.c, d);
                let split = cod_tau(j, d, s.tau).map(|t| t + ell_partition(&s.lambda, s.c, s.tau));
                checks += 1;
                if dim_gh(&s.tail) + cod != ambient || split.ok() != Some(cod) {
                    failures.push(json!({"j": j, "d": d, "lambda": s.lambda, "c": s.c}));
                }
            }
        }
    }
    SuiteSummary::new(Suite::Formulas, checks, failures, json!({"max_j": max_j}))
}

/// Certification outcome against the termwise predicate on all ordered
/// pairs; a pair mismatching under every seed is systematic.
fn closure(opts: &VerifyOptions) -> Result<SuiteSummary> {
    let seeds = opts.seeds.unwrap_or(3);
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut mismatches = Vec::new();
    let mut matrices = BTreeMap::new();
    for (j, d) in opts.grid_or(&SMALL_GRID) {
        let all = strata(j, d);
        let mut matrix = vec![vec![0usize; all.len()]; all.len()];
        for (a, sa) in all.iter().enumerate() {
            for (b, sb) in all.iter().enumerate() {
                let expected = sa.tail.termwise_ge(&sb.tail);
                let mut wrong = 0;
                for k in 0..seeds as u64 {
                    let master = derive_seed(opts.seed, k);
                    let pair = derive_seed(master, (a * all.len() + b) as u64);
                    let v = sample_hilbert_burch(j, d, &sa.relation_degrees, sa.c, pair, opts.modulus)?;
                    let cert = certify_closure_membership(&v.space, &sb.tail, derive_seed(pair, 1), 10)?;
                    checks += 1;
                    if cert.succeeded() {
                        matrix[a][b] += 1;
                    }
                    if cert.succeeded() != expected {
                        wrong += 1;
                        mismatches.push(json!({
                            "j": j, "d": d, "special": sa.tail, "target": sb.tail,
                            "master_seed": k, "outcome": cert.outcome, "expected_success": expected
                        }));
                    }
                }
                if wrong == seeds && seeds > 0 {
                    failures.push(json!({"j": j, "d": d, "special": sa.tail, "target": sb.tail}));
                }
            }
        }
        matrices.insert(format!("({j},{d})"), matrix);
    }
    Ok(SuiteSummary::new(
        Suite::Closure,
        checks,
        failures,
        json!({"success_counts": matrices, "mismatches": mismatches}),
    ))
}

/// Random pencils from a sampled stratum towards a random space.
fn semicontinuity(opts: &VerifyOptions) -> Result<SuiteSummary> {
    let trials = opts.trials.unwrap_or(10_000);
    let grid = opts.grid_or(&SMALL_GRID);
    let catalog: Vec<_> = grid.iter().flat_map(|&(j, d)| strata(j, d)).collect();
    let mut failures = Vec::new();
    for t in 0..trials as u64 {
        let s = &catalog[t as usize % catalog.len()];
        let seed = derive_seed(opts.seed, t);
        let v0 = sample_hilbert_burch(s.j, s.d, &s.relation_degrees, s.c, seed, opts.modulus)?;
        let v1 = random_space(opts.modulus, s.j, s.d, &mut stream_rng(seed, u64::MAX));
        let report = pencil_limit(&v0.space, &v1, derive_seed(seed, 1), 5)?;
        if !report.holds() {
            failures.push(json!({"trial": t, "report": report}));
        }
    }
    Ok(SuiteSummary::new(
        Suite::Semicontinuity,
        trials,
        failures,
        json!({"trials": trials, "strata": catalog.len()}),
    ))
}

fn mu(opts: &VerifyOptions) -> SuiteSummary {
    let max_n = opts.max_j.unwrap_or(20);
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for row in mu_family_dims(n) {
            checks += 1;
            if !row.agrees() {
                failures.push(json!(row));
            }
            rows.push(row);
        }
        checks += 1;
        if !mu_family_closure_is_a_chain(n) {
            failures.push(json!({"n": n, "closure_chain": false}));
        }
    }
    SuiteSummary::new(Suite::Mu, checks, failures, json!(rows))
}

/// Relation degrees from the Hilbert function against the relation module,
/// plus the round trip through signed minors, on sampled spaces of every
/// stratum; also checks the other per-space identities on each sample.
fn oracles(opts: &VerifyOptions) -> Result<SuiteSummary> {
    let trials = opts.trials.unwrap_or(1000);
    let mut checks = 0;
    let mut failures = Vec::new();
    for (j, d) in opts.grid_or(&MAIN_GRID) {
        for (k, s) in strata(j, d).iter().enumerate() {
            let stratum_seed = derive_seed(opts.seed, (j * 1000 + d * 100 + k) as u64);
            for t in 0..trials as u64 {
                let seed = derive_seed(stratum_seed, t);
                let sample = sample_hilbert_burch(j, d, &s.relation_degrees, s.c, seed, opts.modulus)?;
                let v = &sample.space;
                let tail = hilbert_tail(v)?;
                let (lambda, c) = lambda_of(&tail);
                let predicted = relation_degrees(&lambda, d)?;
                let mu = mu_basis(v)?;
                let n = nose(v);
                let t_v = tau(v);
                let (_, gcd_degree) = v.gcd_form().expect("nonzero");
                let ok = mu.col_degrees() == &predicted
                    && mu.regenerates(v)
                    && tail_from_lambda(&lambda, c, j, d)? == tail
                    && gcd_degree == c
                    && t_v == tail.tau()
                    && (1..=d.min(j + 2 - d)).contains(&t_v)
                    && n.scroll.size() == d
                    && n.scroll.len() == t_v;
                checks += 1;
                if !ok {
                    failures.push(json!({
                        "j": j, "d": d, "seed": seed, "tail": tail,
                        "relation_degrees": mu.col_degrees(), "predicted": predicted
                    }));
                }
            }
        }
    }
    Ok(SuiteSummary::new(Suite::Oracles, checks, failures, json!({"trials_per_stratum": trials})))
}

/// Closure of scroll strata is reversed dominance on their partitions.
pub fn nose_closure_agrees(j: usize, d: usize) -> bool {
    let rows = nose_strata(j, d);
    rows.iter().all(|a| {
        rows.iter()
            .all(|b| a.in_closure_of(b) == b.scroll.bruhat_leq(&a.scroll).expect("same size"))
    })
}

/// The poset built from tails reproduces the order: its covering edges
/// generate exactly the termwise relation.
pub fn poset_is_consistent(j: usize, d: usize) -> bool {
    let poset = StrataPoset::build(j, d);
    let n = poset.len();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in &poset.hasse {
        reach[a][b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            if reach[a][k] {
                for b in 0..n {
                    if reach[k][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|a| (0..n).all(|b| reach[a][b] == poset.leq(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions {
        VerifyOptions {
            seed: 1,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn small_suites_pass() {
        let o = VerifyOptions {
            max_j: Some(7),
            ..opts()
        };
        assert!(run_suite(Suite::Orders, &o).unwrap().passed);
        assert!(run_suite(Suite::Formulas, &o).unwrap().passed);
        assert!(run_suite(Suite::Mu, &opts()).unwrap().passed);
        let o = VerifyOptions {
            grid: Some((6, 3)),
            trials: Some(5),
            seeds: Some(1),
            ..opts()
        };
        for suite in [Suite::Dims, Suite::Closure, Suite::Semicontinuity, Suite::Oracles] {
            let s = run_suite(suite, &o).unwrap();
            assert!(s.passed, "{}: {:?}", s.suite, s.failures);
        }
    }

    #[test]
    fn jacobian_ranks_for_first_table() {
        let o = VerifyOptions {
            grid: Some((6, 3)),
            seeds: Some(1),
            ..opts()
        };
        let s = run_suite(Suite::Dims, &o).unwrap();
        let ranks: Vec<u64> = ["(3,3)", "(4,2)", "(5,1)"]
            .iter()
            .map(|d| s.details[format!("(6,3) D={d}")]["ranks"][0].as_u64().unwrap())
            .collect();
        assert_eq!(ranks, vec![21, 20, 18]);
    }

    #[test]
    fn posets_are_consistent() {
        assert!(poset_is_consistent(9, 4));
        assert!(nose_closure_agrees(9, 4));
    }
}
