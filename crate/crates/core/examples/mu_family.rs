//! Dimensions of the families of plane parametrizations of degree n with a
//! relation of degree mu.

use hstrata::experiments::mu_family_dims;

fn main() {
    for n in [5, 6, 7] {
        for row in mu_family_dims(n) {
            println!(
                "n {} mu {}: from relations {}, closed form {}",
                row.n, row.mu, row.dim_from_relations, row.dim_closed_form
            );
        }
    }
}
