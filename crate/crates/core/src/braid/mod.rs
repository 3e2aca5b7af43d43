//! Temperley-Lieb diagrams, the Wenzl recursion and Markov-trace positivity.
//!
//! Loop value `δ = 2cosα`, projectors `E_i = U_i/δ` with `E_i E_{i±1} E_i = τE_i`,
//! `τ = 1/δ²`. Braid generators are `g_k = λ₁(1-E_k) + λ₂E_k` with
//! `λ₁/λ₂ = -e^{2iα}`.

mod diagram;
mod markov;
mod params;
mod relations;
mod scan;
mod wenzl;

pub use diagram::{all_diagrams, markov_trace, TLDiagram, TLElement};
pub use markov::{braid_generator, braid_markov_trace, braid_word_element, strands_for};
pub use params::{
    cutoff_level, enumerate_statistics, eta_closed_form, quantum_integers, wenzl_coefficient, HeckeParams,
    StatisticsSolution,
};
pub use relations::{regular_representation, relation_check, RelationReport, RelationSet};
pub use scan::{grid, nearest_solution, positivity_scan, scan_point, ChannelFate, NearestSolution, PointOutcome, ScanConfig, Survivor};
pub use wenzl::{gram_matrix, jones_wenzl, jw_trace_sequence, min_eigenvalue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BraidError {
    #[error("elements live on {left} and {right} strands (or differ in loop value)")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("Wenzl recursion reached its cutoff at level {level}")]
    CutoffReached { level: usize, degenerate: Box<TLElement> },
    #[error("relation check needs square matrices of one size")]
    ShapeMismatch,
    #[error("pairs do not form a planar perfect matching")]
    InvalidDiagram,
}
