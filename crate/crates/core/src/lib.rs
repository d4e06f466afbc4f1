//! Exact arithmetic for truncated non-commutative multivariate power series.
//!
//! The crate is organised around four layers:
//!
//! * [`combinatorics`]: words, subset/interval splittings, non-crossing
//!   partitions and rooted trees.
//! * [`series`]: the ring of truncated series with the Cauchy product, the
//!   shifted-composition group on series with unit constant term, and the
//!   pre-Lie/Lie structure on series with zero constant term.
//! * [`hopf`]: the word Hopf algebra on tensor words, linear forms on it,
//!   convolution, half-shuffles and the generating-series bijections.
//! * [`cumulants`]: free, Boolean and monotone moment-cumulant transforms
//!   together with brute-force oracles.
//!
//! All coefficients are exact ([`Rational`] or [`PolyT`]); every identity is
//! checked by equality, never by tolerance.

pub mod coeff;
pub mod combinatorics;
pub mod cumulants;
pub mod error;
pub mod exec;
pub mod hopf;
pub mod random;
pub mod series;
pub mod verify;

pub use coeff::{parse_rational, Coefficient, PolyT, Rational};
pub use combinatorics::{TensorWord, Word};
pub use error::{Error, Result};
pub use exec::Execution;
pub use series::{SeriesClass, TruncatedSeries};
