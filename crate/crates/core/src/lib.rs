//! Exact calculus for joint distributions in non-commutative probability.
//!
//! The objects are truncated formal power series in `k` non-commuting
//! indeterminates with rational coefficients and vanishing constant term.
//! On top of the series arithmetic the crate implements the combinatorics
//! of non-crossing set partitions and the transforms built from them:
//! free and Boolean cumulants, free additive (`boxplus`), Boolean
//! (`uplus`) and free multiplicative (`boxtimes`) convolution, convolution
//! powers, the Boolean-to-free `B_t` semigroup, dilations, the squaring
//! map `Phi`, and a moment formula for free Brownian motion driven by
//! partial pairings. A small finite-dimensional operator model provides an
//! independent floating-point cross-check of `Phi`.
//!
//! Everything outside [`operator_model`] is exact: coefficients are
//! arbitrary-precision rationals and all identities are checked for exact
//! equality of every retained coefficient.

pub mod brownian;
pub mod distributions;
pub mod json;
pub mod operator_model;
pub mod partitions;
pub mod report;
pub mod sampling;
pub mod series;
pub mod transforms;

pub use distributions::Distribution;
pub use partitions::{GroundSet, PartialPairing, SetPartition};
pub use report::IdentityReport;
pub use series::{Rational, Series, TruncatedSeries, Word};
