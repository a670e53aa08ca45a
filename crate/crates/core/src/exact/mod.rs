//! Arithmetic substrate: exact rationals, dense polynomials, truncated power
//! series in `u` with polynomial coefficients, and integer binomials.

mod binomial;
mod poly;
mod rat;
mod series;

pub use binomial::{binomial, choose, factorial};
pub use poly::{Poly, Var};
pub use rat::Rat;
pub use series::USeries;
