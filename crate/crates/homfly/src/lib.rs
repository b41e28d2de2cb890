//! Exact colored HOMFLY polynomials of braid closures.
//!
//! The symmetric MOY state sum expresses `P_r(L; a, q)` through q-Ehrhart
//! polynomials of chain polytopes; everything is computed over `ℚ` with
//! half-integer powers of `a` and `q`.

pub mod algebra;
pub mod analysis;
pub mod diagram;
pub mod oracles;
pub mod par;
pub mod qehrhart;
pub mod statesum;
