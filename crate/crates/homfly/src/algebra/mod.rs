//! Exact algebra over `ℚ` in the half-power variables `x = q^(1/2)` and `α = a^(1/2)`.

pub mod half;
pub mod json;
pub mod laurent;
pub mod linkpoly;
pub mod rat;
pub mod ratfunc;
pub mod render;
pub mod series;
mod zpoly;

use thiserror::Error;

pub use half::HalfInt;
pub use laurent::LaurentX;
pub use linkpoly::{LinkPoly, LinkSum, Monomial};
pub use rat::{binomial, frac, int, parse_rat, Rat};
pub use ratfunc::RatFuncX;
pub use series::{
    one_minus_q, pochhammer, pochhammer_finite, pochhammer_series, series_at_q_infinity, PochLength,
    PochValue, QSeries,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("divergent product")]
    DivergentProduct,
    #[error("division is not exact in this ring")]
    NotDivisible,
    #[error("{0}")]
    Parse(String),
}

/// Which variable to take a degree in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    A,
    Q,
}

/// Maximal degree of `p` in `a` or in `q` (at `q → ∞`); `None` stands for `−∞`.
pub fn maxdeg(p: &LinkPoly, var: Var) -> Option<HalfInt> {
    match var {
        Var::A => p.maxdeg_a(),
        Var::Q => p.maxdeg_q(),
    }
}
