//! Numerical toolkit behind the `deskcalc` command line: single-variable
//! expressions with symbolic derivatives, goal seeking and Riemann sums,
//! compound-interest schedules, and classical two-sample and k-sample tests.

pub mod calculus;
pub mod expr;
pub mod finance;
pub mod stats;

pub use expr::{parse, Expr};
