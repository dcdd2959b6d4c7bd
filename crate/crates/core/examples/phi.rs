//! The map from permutations with a positive first entry to those with a
//! negative one, step by step.

use btableaux::matchings::phi_trace;
use btableaux::signedperm::{crossings, stats, SignedPermutation};

fn main() -> btableaux::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,-4,-2,1".into());
    let p: SignedPermutation = arg.parse()?;
    let t = phi_trace(&p)?;
    println!("pi        {p}");
    println!("split     {}", t.split);
    println!("{}", t.split.render());
    println!("rotated   {}", t.rotated);
    println!("reversed  {}", t.reversed);
    println!("sigma     {}", t.sigma);
    println!("image     {}", t.image);
    let (a, b) = (stats(&p), stats(&t.image));
    println!("cro {} -> {}", crossings(&p), crossings(&t.image));
    println!("neg {} -> {}", a.neg, b.neg);
    println!("fwex {} -> {}", a.fwex, b.fwex);
    Ok(())
}
