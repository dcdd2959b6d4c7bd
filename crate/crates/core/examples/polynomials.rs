//! Exact polynomial and power series arithmetic.

use btableaux::exactalg::{q_integer, MultiPoly, Series, Var};

fn main() -> btableaux::Result<()> {
    let a: MultiPoly = "y^2 + y*t".parse()?;
    let b: MultiPoly = "1 + y*t*q".parse()?;
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");
    println!("quotient back: {}", prod.divide_exact(&b)?);
    println!("at t = 1, q = -1: {}", prod.subst(&[(Var::T, 1), (Var::Q, -1)]));
    println!("[4]_q = {}", q_integer(4));
    println!("q-derivative in t of t^3: {}", MultiPoly::mono(1, 0, 3, 0).q_derivative_t());

    // z / (1 - z - z^2) and its compositional inverse
    let f = Series::new(vec![MultiPoly::one(), MultiPoly::constant(-1), MultiPoly::constant(-1)], 8)
        .inverse()?
        .shift(1);
    let r = f.reversion()?;
    println!("f = {:?}", f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("f^(-1) = {:?}", r.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
