//! Exact computer algebra for certifying the `X_m` surfaces of degree
//! `m^2 - m + 3` in `P^4` as counterexamples to the Eisenbud-Goto
//! regularity bound.

pub mod arith;
pub mod cert;
pub mod groebner;
pub mod linalg;
pub mod poly;
