//! Exact generating polynomials, bijections and continued fractions for
//! signed permutations and type B permutation tableaux.

pub mod ansatz;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod genfun;
pub mod matchings;
pub mod paths;
pub mod signedperm;
pub mod tableaux;
pub mod verify;

mod ascii;
mod par;

pub use error::{Error, Result};
