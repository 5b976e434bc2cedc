//! Tables of strata: Hilbert-function strata of Grass(R_6, 3) and
//! Grass(R_8, 3), and scroll strata of Grass(R_9, 4).

use hstrata::cli::{nose_table, strata_table, TableFormat};
use hstrata::Partition;

fn main() -> hstrata::Result<()> {
    print!("{}", strata_table(6, 3, TableFormat::Csv, None)?);
    println!();
    let star = Partition::new(vec![5, 1])?;
    print!("{}", strata_table(8, 3, TableFormat::Csv, Some((&star, 0)))?);
    println!();
    print!("{}", nose_table(9, 4, TableFormat::Csv)?);
    Ok(())
}
