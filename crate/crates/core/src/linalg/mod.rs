//! Exact linear algebra over the rationals.

mod echelon;
mod elim;
mod matrix;
mod reconstruct;

pub use echelon::{EchelonSpan, Reduction, SparseVec};
pub use elim::{
    bareiss, det, kernel, left_kernel, rank_det_kernel, rref, rref_with_transform, solve_span, BareissResult,
    RankDetKernel, Rref, SpanSolution,
};
pub use matrix::{QMatrix, QVector};
pub use reconstruct::{rational_reconstruct, DEFAULT_MAX_DEN};
