//! Exact rationals and dense rational matrices.
//!
//! Everything downstream is computed over `Rational`; there is no floating
//! point anywhere in the crate.

mod matrix;
mod rational;

pub use matrix::{matrix_rank, solve_exact, QMatrix};
pub use rational::Rational;
