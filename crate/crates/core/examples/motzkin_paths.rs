//! Weighted Motzkin path models and the two encodings of permutations.

use btableaux::paths::{enumerate_mn, enumerate_nn, fv1, fz1, mn_sum, nn_sum};
use btableaux::signedperm::SignedPermutation;

fn main() -> btableaux::Result<()> {
    let p: SignedPermutation = "3,-5,-2,4,1".parse()?;
    let v = fv1(&p);
    println!("fv1({p}) = {v}\n{}", v.render());

    let p: SignedPermutation = "-5,4,2,-3,1".parse()?;
    let z = fz1(&p);
    println!("fz1({p}) = {z}\n{}", z.render());

    for n in 0..=3 {
        println!(
            "n = {n}: |M_n| = {}, |N_n| = {}, sums agree: {}",
            enumerate_mn(n)?.count(),
            enumerate_nn(n)?.count(),
            mn_sum(n)? == nn_sum(n)?
        );
    }
    println!("B_3 = {}", mn_sum(3)?);
    Ok(())
}
