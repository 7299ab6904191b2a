//! Evaluation of noncommutative polynomials at matrix tuples.

mod classify;
mod evaluate;
mod generic;
mod special;
mod tuple;

pub use classify::{classify_point, PointReport, PointValues, ZeroFlags};
pub use evaluate::{eval, eval_apply, eval_many};
pub use generic::{generic_eval, pi_test, pi_test_with_cap, CMatrix, DEFAULT_TERM_CAP};
pub use special::{standard_poly, weyl_pair, STANDARD_POLY_CAP};
pub use tuple::{MatTuple, TupleFile};
