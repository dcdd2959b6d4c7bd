//! Runs the named checks through the library interface.

use btableaux::verify::{check_names, run_check, Bounds};

fn main() -> btableaux::Result<()> {
    let bounds = Bounds { max_n: 4, max_n_int: 6 };
    for name in check_names() {
        let report = run_check(name, &bounds)?;
        println!("{}", report.line());
    }
    Ok(())
}
