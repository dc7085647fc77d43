//! Exact graded polynomial arithmetic over the integers.

mod monomial;
mod poly;
mod symmetric;
mod text;

pub use monomial::{Monomial, Var};
pub use poly::{ArithOp, Polynomial};
pub use symmetric::{symmetric_rewrite, symmetric_rewrite_over, to_torus};

use crate::error::Result;

/// `p op q` over the given variable set.
pub fn arith(p: &Polynomial, q: &Polynomial, op: ArithOp, vars: &[Var]) -> Result<Polynomial> {
    Polynomial::arith(p, q, op, vars)
}

/// Substitutes `value` for `var` in `p`; see [`Polynomial::substitute`].
pub fn substitute(p: &Polynomial, var: Var, value: &Polynomial) -> Result<Polynomial> {
    p.substitute(var, value)
}

/// `t1 - t2`, which shows up in nearly every pushforward formula.
pub fn torus_difference() -> Polynomial {
    Polynomial::linear(&[(1, Var::T1), (-1, Var::T2)])
}
