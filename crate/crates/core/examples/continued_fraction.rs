//! The recurrence and the continued fraction for the generating series.

use btableaux::ansatz::{cf_coeffs, cf_series, recurrence_all};

fn main() {
    for h in 0..3 {
        let (g, l) = cf_coeffs(h);
        println!("gamma_{h} = {g}\nlambda_{} = {l}", h + 1);
    }
    let s = cf_series(5);
    for (n, b) in recurrence_all(5).iter().enumerate() {
        println!("B_{n} = {b}   (fraction agrees: {})", s.coeff(n) == b);
    }
}
