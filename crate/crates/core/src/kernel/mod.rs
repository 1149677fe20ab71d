//! Exact arithmetic kernel: rationals, combinatorics, and polynomial algebra.

pub mod bipoly;
pub mod combinatorics;
pub mod poly;
pub mod rational;

pub use bipoly::SparseBiPoly;
pub use combinatorics::{beta_int, binomial, binomial_q, factorial, factorial_q};
pub use poly::DensePoly;
pub use rational::{int, parse_rational, parse_rational_list, rat, render, Rational};
