//! Exact decision procedures for vanishing sets of noncommutative polynomials
//! evaluated on matrix tuples of arbitrary size.
//!
//! Every decision is returned together with a certificate that can be
//! re-checked by exact rational arithmetic: either an algebraic combination
//! (left ideal, two-sided homogeneous ideal, commutators, linear span,
//! univariate subalgebra) or an explicit matrix witness.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`], [`word`], [`parse`]: the free algebra over the rationals.
//! - [`linalg`]: exact dense and sparse linear algebra, rational reconstruction.
//! - [`eval`]: evaluation at matrix tuples, generic matrices, polynomial identities.
//! - [`cert`]: membership procedures and the serialisable [`cert::Certificate`].
//! - [`factor`]: factorization, stable associativity, determinantal inclusion.
//! - [`lowrank`]: numerical search for low-rank values and their exactification.

pub mod cert;
pub mod cpoly;
pub mod error;
pub mod eval;
pub mod factor;
pub mod linalg;
pub mod roots;
pub mod lowrank;
pub mod parse;
pub mod poly;
pub mod sample;
pub mod scalar;
mod serde_util;
pub mod word;

pub use error::{Error, Result};
pub use poly::{Degree, NcPoly};
pub use scalar::Scalar;
pub use word::Word;
