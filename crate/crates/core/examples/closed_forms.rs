//! Closed forms at t = 1, t = 0, and the values at q = -1.

use btableaux::ansatz::{
    binomial_q_minus_one, closed_form_y0q, closed_form_y1q, narayana_b, ClosedForm,
};
use btableaux::exactalg::Var;
use btableaux::genfun::b_poly_perms;

fn main() -> btableaux::Result<()> {
    for n in 0..=4 {
        let b = b_poly_perms(n)?;
        let one = closed_form_y1q(n, ClosedForm::Telescoped)?;
        let two = closed_form_y1q(n, ClosedForm::Lemma)?;
        println!("n = {n}");
        println!("  t = 1:  {one}");
        println!("          forms agree {}, brute force agrees {}", one == two, one == b.subst(&[(Var::T, 1)]));
        println!("  t = 0:  {}", closed_form_y0q(n)?);
        println!("  q = -1: {}", binomial_q_minus_one(n));
        println!("  q = 0, t = 1: {}", narayana_b(n));
    }
    Ok(())
}
