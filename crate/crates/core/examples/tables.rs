//! Coefficient tables by exhaustive enumeration.

use btableaux::genfun::{eulerian_a_rows, rows_to_csv, GenTable, Variant};

fn main() -> btableaux::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let t = GenTable::build(n)?;
    println!("B_{n} = {}\n", t.b_poly());
    for v in [Variant::Plain, Variant::Star, Variant::EulerianB] {
        println!("{}:\n{}", v.name(), t.to_csv(v));
    }
    println!("eulerian-a:\n{}", rows_to_csv(n, &eulerian_a_rows(n)?));
    Ok(())
}
