//! Reciprocity and the degree bound for `E(a q^{-1}, −1, q)`.

use super::brute::weighted_count;
use super::ehrhart::ehrhart;
use super::polytope::{LinearForm, Polytope};
use super::EhrhartError;
use crate::algebra::{HalfInt, LinkPoly, Monomial, RatFuncX};

/// `(E(q^N, −N, q^{-1}), (−1)^{dim Q} · W_λ((NQ)°, q))`.
pub fn reciprocity_sides(q: &Polytope, lambda: &LinearForm, n: u32) -> Result<(RatFuncX, RatFuncX), EhrhartError> {
    let e = ehrhart(q, lambda)?;
    let lhs = e
        .evaluate(&Monomial::unit(0, 2 * n as i64), -(n as i64), true)
        .as_ratfunc()
        .expect("no a-dependence");
    let mut rhs = RatFuncX::from_laurent(weighted_count(q, lambda, n, true)?);
    if q.dim() % 2 == 1 {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

pub fn reciprocity_check(q: &Polytope, lambda: &LinearForm, n: u32) -> Result<bool, EhrhartError> {
    let (l, r) = reciprocity_sides(q, lambda, n)?;
    Ok(l == r)
}

/// `maxdeg_a E(a/q, −1, q) ≤ max_Q λ` and `maxdeg_q E(a/q, −1, q) ≤ −max_Q λ`.
pub fn ehrhart_degree_bound_check(q: &Polytope, lambda: &LinearForm) -> Result<bool, EhrhartError> {
    let e = ehrhart(q, lambda)?;
    let v: LinkPoly = e.evaluate(&Monomial::unit(2, -2), -1, false);
    let m = q.max_form(lambda);
    let a_ok = v.maxdeg_a().is_none_or(|d| d <= HalfInt::from_int(m));
    let q_ok = v.maxdeg_q().is_none_or(|d| d <= HalfInt::from_int(-m));
    Ok(a_ok && q_ok)
}
