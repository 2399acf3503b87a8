//! Exact Grassmann-algebra arithmetic, matrices over the even and odd parts,
//! and Z2-graded Cayley-Hamilton trace identities.
//!
//! The layers build on each other:
//!
//! - [`grassmann`]: elements of `E` and of its extension `F = E<w>`.
//! - [`matrix`]: square matrices over `E`/`F`.
//! - [`charpoly`]: Faddeev-LeVerrier characteristic polynomials over `E_0`.
//! - [`graded`]: the graded characteristic data `(alpha, beta)` of an even/odd
//!   pair and the identities built from it, computed two independent ways.
//! - [`symbolic`]: the same recursions over formal trace symbols, with LaTeX,
//!   S-expression and JSON output.
//! - [`harness`]: seeded random trials and reports behind the CLI.

pub mod charpoly;
mod error;
pub mod graded;
pub mod grassmann;
pub mod harness;
pub mod matrix;
pub mod symbolic;

pub use error::{Error, Result};
pub use grassmann::{AlgebraConfig, Blade, Context, Element, Parity};
pub use matrix::Matrix;

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
