//! Statistics of one signed permutation, with crossings counted two ways.

use btableaux::signedperm::{
    alignments, crossings, crossings_via_configurations, pattern_stats, stats, SignedPermutation,
};

fn main() -> btableaux::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,-6,1,-5,-3,7,2".into());
    let p: SignedPermutation = arg.parse()?;
    let s = stats(&p);
    let ps = pattern_stats(&p);
    println!("pi = {p}");
    println!("wex {}  exc {}  des {}  neg {}", s.wex, s.exc, s.des, s.neg);
    println!("fwex {}  fexc {}  fdes {}", s.fwex, s.fexc, s.fdes);
    println!("hasc {}  pat {}  fneg {}", ps.hasc, ps.pat, ps.fneg);
    println!("cro {} (configurations: {})", crossings(&p), crossings_via_configurations(&p));
    println!("al {}", alignments(&p));
    println!("transpose {}  negate {}", p.transpose(), p.negate());
    Ok(())
}
