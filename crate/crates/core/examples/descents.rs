//! The same polynomial from three families of statistics.

use btableaux::genfun::{b_poly_by_fdes, b_poly_by_hasc, b_poly_perms};

fn main() -> btableaux::Result<()> {
    for n in 0..=4 {
        let b = b_poly_perms(n)?;
        println!("B_{n} = {b}");
        println!("  (hasc, neg, pat)        agrees: {}", b_poly_by_hasc(n)? == b);
        println!("  (2n - fdes, fneg, mot+) agrees: {}", b_poly_by_fdes(n)? == b);
    }
    Ok(())
}
