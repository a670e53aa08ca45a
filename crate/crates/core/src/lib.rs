//! Exact Eulerian numbers and polynomials.
//!
//! Three families are covered, all in exact rational arithmetic:
//!
//! * classical Eulerian numbers `A(n,k)` and polynomials `A_n(t)` ([`classical`]),
//! * Eulerian numbers and polynomials attached to an arithmetic progression
//!   `a, a+d, a+2d, ...` ([`general`]),
//! * Carlitz q-Eulerian numbers and polynomials ([`qeulerian`]).
//!
//! Every identity relating them is available as a check returning a
//! [`Check`](check::Check), and [`oracle`] provides brute-force ground truth by
//! permutation enumeration and direct summation. [`verify`] aggregates all
//! checks into a report.
//!
//! With the `parallel` feature (on by default) permutation enumeration and
//! report generation run on the rayon thread pool; without it the same code
//! paths run sequentially and produce identical results.

pub mod check;
pub mod classical;
pub mod error;
pub mod exact;
pub mod general;
pub mod oracle;
pub mod qeulerian;
pub mod verify;

pub use check::{Check, Mismatch};
pub use error::{Error, Result};
pub use exact::{binomial, Poly, Rat, USeries, Var};
pub use general::Progression;
