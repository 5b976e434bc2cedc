use std::fmt::Write as _;

use serde::Serialize;

use super::descriptor::{strata, StratumDescriptor};

/// Strata of `Grass(R_j, d)` ordered by closure: `a ≤ b` when the tail of
/// `b` is termwise at least the tail of `a`, i.e. `b` lies in the closure of
/// `a`.
#[derive(Clone, Debug, Serialize)]
pub struct StrataPoset {
    pub j: usize,
    pub d: usize,
    pub strata: Vec<StratumDescriptor>,
    /// Covering pairs `(a, b)`: `b` covers `a`, pointing into the closure.
    pub hasse: Vec<(usize, usize)>,
}

impl StrataPoset {
    pub fn build(j: usize, d: usize) -> Self {
        Self::from_strata(j, d, strata(j, d))
    }

    pub fn from_strata(j: usize, d: usize, strata: Vec<StratumDescriptor>) -> Self {
        let n = strata.len();
        let leq = |a: usize, b: usize| strata[b].tail.termwise_ge(&strata[a].tail);
        let mut hasse = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq(a, b) {
                    continue;
                }
                let covered = (0..n).any(|m| m != a && m != b && leq(a, m) && leq(m, b));
                if !covered {
                    hasse.push((a, b));
                }
            }
        }
        StrataPoset { j, d, strata, hasse }
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// `b` lies in the closure of `a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.strata[b].tail.termwise_ge(&self.strata[a].tail)
    }

    pub fn index_of_tail(&self, values: &[usize]) -> Option<usize> {
        self.strata.iter().position(|s| s.tail.values() == values)
    }

    /// Indices of the strata in the closure of `a`, including `a`.
    pub fn closure_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq(a, b)).collect()
    }

    /// Termwise-largest stratum.
    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&b| (0..self.len()).all(|a| self.leq(a, b)))
            .expect("the constant tail dominates every stratum")
    }

    /// All saturated chains from `lo` up to `hi` along covering edges.
    pub fn maximal_chains(&self, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![lo];
        self.extend_chains(hi, &mut path, &mut out);
        out
    }

    fn extend_chains(&self, hi: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == hi {
            out.push(path.clone());
            return;
        }
        for &(a, b) in &self.hasse {
            if a == last && self.leq(b, hi) {
                path.push(b);
                self.extend_chains(hi, path, out);
                path.pop();
            }
        }
    }

    /// Graphviz digraph with nodes labelled `λ | tail | dim`.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph strata_{}_{} {{\n  rankdir=BT;\n", self.j, self.d);
        for (i, st) in self.strata.iter().enumerate() {
            let _ = writeln!(
                s,
                "  n{i} [label=\"{} c={} | {} | {}\"];",
                st.lambda, st.c, st.tail, st.dim
            );
        }
        for (a, b) in &self.hasse {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}
