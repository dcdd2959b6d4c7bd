//! Truncated matrix solutions and the polynomials they produce.

use btableaux::ansatz::{ansatz_bn_truncated, verify_relations, Solution};
use btableaux::genfun::b_poly_perms;

fn main() -> btableaux::Result<()> {
    let sys = Solution::First.system(4);
    println!("D =\n{}", sys.d);
    println!("E =\n{}", sys.e);
    for which in [Solution::First, Solution::Second] {
        verify_relations(&which.system(8))?;
        for n in 0..=4 {
            let a = ansatz_bn_truncated(n, which, n + 1)?;
            println!("{which:?} n = {n}: {a}  (brute force agrees: {})", a == b_poly_perms(n)?);
        }
    }
    Ok(())
}
