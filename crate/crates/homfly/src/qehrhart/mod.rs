//! q-analogues of Ehrhart polynomials: weighted lattice-point sums
//! `W_λ(NQ, q) = Σ_{x ∈ NQ ∩ ℤ^m} q^{λ(x)}` and the polynomial `E_{λ,Q}(a, b, q)`
//! with `E(q^N, N, q) = W_λ(NQ, q)`.

mod brute;
mod checks;
mod ehrhart;
mod linalg;
mod partial;
mod polytope;

use thiserror::Error;

pub use brute::weighted_count;
pub use checks::{ehrhart_degree_bound_check, reciprocity_check, reciprocity_sides};
pub use ehrhart::{chain_ehrhart, ehrhart, ehrhart_order_polytope, ehrhart_simplex, EhrhartPoly, EhrhartTerm};
pub use partial::{from_generating_function, GfPart};
pub use polytope::{LatticeSimplex, LinearForm, Polytope, Poset, PosetFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhrhartError {
    #[error("vertices are not affinely independent")]
    Degenerate,
    #[error("vertices have mismatched dimensions")]
    DimensionMismatch,
    #[error("linear form has {got} coefficients, expected {expected}")]
    FormLength { got: usize, expected: usize },
    #[error("cover relation has a cycle")]
    Cyclic,
    #[error("duplicate cover ({0}, {1})")]
    DuplicateCover(String, String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("invalid poset file: {0}")]
    Parse(String),
}
