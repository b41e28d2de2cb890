//! Closed formula for `P_r` of the closure of `σ_1^c`.

use num_traits::One;

use super::OracleError;
use crate::algebra::{pochhammer_finite, LinkPoly, Monomial, Rat};

fn poch(alpha: i64, x: i64, k: u32) -> LinkPoly {
    // all products here step by q^-1
    pochhammer_finite(&Monomial::unit(alpha, x), -2, k)
}

/// `(q^{r(r-1)/2} a^{r/2})^{-c} Σ_{k=0}^{r} q^{c((r-k)^2-k)/2} (-1)^{c(r-k)} a^r q^{-k-r}
///  (q a^{-1};q^{-1})_k (a^{-1};q^{-1})_{2r-k}
///  / ((q^{-1};q^{-1})_k (q^{-1};q^{-1})_{2(r-k)} (q^{-2(r-k+1)};q^{-1})_k)`.
pub fn t2_formula(c: i64, r: u32) -> Result<LinkPoly, OracleError> {
    if r == 0 {
        return Err(OracleError::ZeroColor);
    }
    let ri = r as i64;
    let mut total = LinkPoly::zero();
    for k in 0..=r {
        let ki = k as i64;
        let rk = ri - ki;
        let num = &poch(-2, 2, k) * &poch(-2, 0, 2 * r - k);
        let den = &(&poch(0, -2, k) * &poch(0, -2, 2 * (r - k))) * &poch(0, -4 * (rk + 1), k);
        let den = den.as_ratfunc().ok_or(OracleError::VanishingDenominator { k })?;
        let term = num.div_ratfunc(&den).map_err(|_| OracleError::VanishingDenominator { k })?;
        let sign = if (c * rk).rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() };
        let x = c * (rk * rk - ki) - 2 * ki - 2 * ri;
        total = &total + &term.mul_monomial(2 * ri, x, &sign);
    }
    Ok(total.mul_monomial(-ri * c, -ri * (ri - 1) * c, &Rat::one()))
}
