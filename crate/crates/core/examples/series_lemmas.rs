//! Series identities behind the closed forms, checked to a fixed order.

use btableaux::ansatz::{lagrange_check, schroeder_lemma_check};

fn main() -> btableaux::Result<()> {
    match schroeder_lemma_check(8) {
        Ok(items) => println!("fraction identities: {items} items agree to order 8"),
        Err(m) => println!("fraction identities: {m}"),
    }
    for k in 0..=4 {
        match lagrange_check(k, 10)? {
            Ok(items) => println!("inversion, k = {k}: {items} coefficients agree"),
            Err(m) => println!("inversion, k = {k}: {m}"),
        }
    }
    Ok(())
}
