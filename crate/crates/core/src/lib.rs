//! Exact q-Fibonacci polynomials, the q-golden ratio as a truncated power
//! series, and executable checks of the identities linking them to the
//! Catalan numbers.
//!
//! The algebra layer ([`qseries`]) is generic over any exact ring that
//! implements the `num-traits` arithmetic traits; everything above it works
//! on [`BigInt`] through the [`IntPoly`] and [`TruncatedSeries`] aliases.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod golden;
pub mod qfib;
pub mod qseries;
pub mod report;
pub mod sw_identity;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use qseries::{Coeff, Poly, Series};
pub use report::{Quantity, VerificationReport};
pub use sw_identity::Composition;

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;

/// Power series in `q` with integer coefficients, known modulo `q^order`.
pub type TruncatedSeries = Series<BigInt>;
