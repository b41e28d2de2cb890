//! Independent reference values: the closed 2-braid formula, a Hecke-algebra
//! HOMFLY evaluator for `r = 1`, and a cross-check driver over all of them.

mod convention;
mod crosscheck;
mod skein;

mod t2;

use thiserror::Error;

pub use convention::ConventionMap;
pub use crosscheck::{crosscheck, CrosscheckReport, PairResult};
pub use skein::{calibrated_convention, homfly_skein, homfly_skein_with, SKEIN_MAX_CROSSINGS, SKEIN_MAX_STRANDS};
pub use t2::t2_formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("skein budget exceeded: {0}")]
    Budget(String),
    #[error("vanishing denominator factor in the 2-braid formula at k = {k}")]
    VanishingDenominator { k: u32 },
    #[error("color must be at least 1")]
    ZeroColor,
}


#[cfg(test)]
mod convention_tests {
    use super::*;

    #[test]
    fn kappa_is_negative() {
        assert_eq!(calibrated_convention().kappa, -1);
        assert_eq!(ConventionMap::morton().unknot(), -t2_formula(1, 1).unwrap());
    }
}
