//! Ordered matchings, their crossings and the rotation and reversal moves.

use btableaux::matchings::{pignose_matching, OrderedMatching};
use btableaux::signedperm::SignedPermutation;

fn main() -> btableaux::Result<()> {
    let m: OrderedMatching = "(1,5);(4,2);(8,3);(6,7)".parse()?;
    println!("{m}\n{}", m.render());
    println!("rho      {}", m.rho()?);
    println!("reverse  {}", m.reverse()?);
    println!("crossings {}", m.crossings());

    let p: SignedPermutation = "3,1,4,2".parse()?;
    let pm = pignose_matching(&p)?;
    println!("\npignose matching of {p}: {pm} (pignose: {})", pm.is_pignose());
    println!("{}", pm.render());
    Ok(())
}
