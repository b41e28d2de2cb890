//! Braid words, their resolved MOY graphs, and elementary flows on them.

mod braid;
mod flows;
mod graph;

use thiserror::Error;

pub use braid::{parse_braid, stats, BraidWord, DiagramStats};
pub use flows::{
    elementary_flows, intersection_number, MAX_ELEMENTARY_FLOWS, pairing_x4, rotation_number, ElementaryFlow, FlowComponent,
};
pub use graph::{resolve, Edge, MoyGraph, ResolutionIndex, TrivalentVertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error at token {position} ({token:?}): {message}")]
    Parse { position: usize, token: String, message: String },
    #[error("generator {index} is out of range for {strands} strands")]
    Generator { index: i64, strands: usize },
    #[error("resolution index has {got} entries for {expected} crossings")]
    IndexLength { got: usize, expected: usize },
    #[error("resolution value {value} exceeds color {r}")]
    IndexValue { value: u32, r: u32 },
    #[error("more than {cap} elementary flows on one resolution")]
    TooManyFlows { cap: usize },
    #[error("graph invariant violated: {0}")]
    Invariant(String),
}
