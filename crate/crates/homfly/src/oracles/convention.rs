//! Dictionary between Morton's `(v, z)` and the `(a, q)` used here.

use crate::algebra::{int, LaurentX, LinkPoly, Rat, RatFuncX};

/// `v = a^{-1/2}`, `z = κ (q^{1/2} - q^{-1/2})`. The sign `κ` absorbs the
/// normalization of the closed 2-braid formula; `reduced` is always false here
/// (the unknot evaluates to `(v^{-1} - v)/z`, not 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConventionMap {
    pub v_alpha_exp: i64,
    pub kappa: i64,
    pub reduced: bool,
}

impl ConventionMap {
    pub fn morton() -> Self {
        ConventionMap { v_alpha_exp: -1, kappa: 1, reduced: false }
    }

    pub fn with_kappa(kappa: i64) -> Self {
        ConventionMap { kappa, ..Self::morton() }
    }

    /// `v^k` as a polynomial in `α`.
    pub fn v_pow(&self, k: i64) -> LinkPoly {
        LinkPoly::monomial(self.v_alpha_exp * k, 0, int(1))
    }

    pub fn z(&self) -> LaurentX {
        LaurentX::from_terms([(1, Rat::from_integer(self.kappa.into())), (-1, Rat::from_integer((-self.kappa).into()))])
    }

    /// The unknot, `(v^{-1} - v)/z`.
    pub fn unknot(&self) -> LinkPoly {
        let num = &self.v_pow(-1) - &self.v_pow(1);
        num.div_ratfunc(&RatFuncX::from_laurent(self.z())).expect("z is nonzero")
    }
}
