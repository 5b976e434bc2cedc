//! Closure order on the strata of Grass(R_6, 3): covering relations,
//! saturated chains, and the DOT rendering.

use hstrata::strata::StrataPoset;

fn main() {
    let poset = StrataPoset::build(6, 3);
    for &(a, b) in &poset.hasse {
        println!("{} is in the closure of {}", poset.strata[b].tail, poset.strata[a].tail);
    }
    let lo = poset.index_of_tail(&[4, 2, 1, 0]).expect("stratum exists");
    let hi = poset.index_of_tail(&[4, 3, 2]).expect("stratum exists");
    for chain in poset.maximal_chains(lo, hi) {
        let tails: Vec<String> = chain.iter().map(|&i| poset.strata[i].tail.to_string()).collect();
        println!("chain: {}", tails.join(" < "));
    }
    print!("{}", poset.to_dot());
}
