//! Pignose and full pignose diagrams.

use btableaux::signedperm::diagram::{render_pignose, FullPignoseDiagram};
use btableaux::signedperm::{crossings, SignedPermutation};

fn main() -> btableaux::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,-4,-2,1".into());
    let p: SignedPermutation = arg.parse()?;
    println!("{}", render_pignose(&p));
    let full = FullPignoseDiagram::new(&p);
    println!("{}", full.render());
    println!(
        "crossing pairs {} = 2 * cro({p}) = 2 * {}; alignment pairs {}",
        full.crossing_pairs(),
        crossings(&p),
        full.alignment_pairs()
    );
    Ok(())
}
