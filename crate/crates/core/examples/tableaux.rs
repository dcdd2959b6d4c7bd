//! Type B permutation tableaux: enumeration, statistics, drawing.

use std::collections::BTreeMap;

use btableaux::tableaux::{b_poly_tableaux, enumerate_ptb, PermTableauB};

fn main() -> btableaux::Result<()> {
    let t: PermTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n-\n".parse()?;
    println!("{}", t.render());
    let s = t.stats()?;
    println!("row {}  diag {}  so {}\n", s.row, s.diag, s.so);

    for n in 0..=4 {
        let mut by_row = BTreeMap::new();
        for t in enumerate_ptb(n)? {
            *by_row.entry(t.stats()?.row).or_insert(0u64) += 1;
        }
        println!("n = {n}: tableaux by rows {by_row:?}");
    }
    println!("\nB_3 from tableaux: {}", b_poly_tableaux(3)?);
    Ok(())
}
