//! Symmetric, anti-symmetric and brute-force MOY evaluations and the colored
//! HOMFLY state sums built from them.

mod brute;
mod evaluate;
mod homfly;
mod sequences;

use thiserror::Error;

use crate::diagram::DiagramError;

pub use brute::{moy_bruteforce, moy_states, MoyState};
pub use evaluate::{antisymmetric_eval, antisymmetric_parts, symmetric_eval, AntisymParts, BMode, ChainCache};
pub use homfly::{
    antisym_homfly, colored_homfly, colored_homfly_with, crossing_coefficient, resolution_terms, EvalOptions,
    ResolutionTerm, DEFAULT_MAX_RESOLUTIONS, MAX_RESOLUTIONS_ENV,
};
pub use sequences::{enumerate_sequences, sequence_classes, FlowFilter, FlowSequence, SequenceClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateSumError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("{needed} resolutions exceed the size guard of {cap} (set HOMFLY_MAX_RESOLUTIONS to raise it)")]
    SizeGuard { needed: String, cap: u64 },
    #[error("color must be at least 1")]
    ZeroColor,
    #[error("b-dependence detected: coefficient of binom(b+{index}-1, {index}-1) is nonzero")]
    BDependence { index: u32 },
    #[error("flow weight 4w = {0} is not even; q^(1/4) powers are not representable")]
    OddWeight(i64),
}
