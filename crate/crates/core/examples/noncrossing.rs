//! Noncrossing signed permutations counted by half their flag weak excedances.

use btableaux::exactalg::binom;
use btableaux::signedperm::{crossings, enumerate_bn, stats};

fn main() -> btableaux::Result<()> {
    for n in 0..=6 {
        let mut counts = vec![0u64; n + 1];
        for p in enumerate_bn(n)?.filter(|p| crossings(p) == 0) {
            counts[stats(&p).fwex / 2] += 1;
        }
        let squares: Vec<_> = (0..=n).map(|k| binom(n as i64, k as i64).pow(2)).collect();
        println!("n = {n}: {counts:?}  C(n,k)^2 = {squares:?}");
    }
    Ok(())
}
