//! The zigzag bijections from tableaux to permutations.

use btableaux::signedperm::{crossings, stats};
use btableaux::tableaux::{zigzag_a, zigzag_b, PermTableau, PermTableauB};

fn main() -> btableaux::Result<()> {
    let a: PermTableau = "vhvvhhhv\n1001\n011\n001\n-\n".parse()?;
    println!("{}", a.render());
    println!("-> {}\n", zigzag_a(&a)?);

    let b: PermTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n-\n".parse()?;
    println!("{}", b.render());
    let p = zigzag_b(&b)?;
    let s = b.stats()?;
    println!("-> {p}");
    println!("(row, diag, so) = ({}, {}, {})", s.row, s.diag, s.so);
    println!("(wex, neg, cro) = ({}, {}, {})", stats(&p).wex, p.neg_count(), crossings(&p));
    Ok(())
}
