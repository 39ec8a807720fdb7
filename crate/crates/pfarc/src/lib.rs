//! Exact-arithmetic engine for standard monomial theory on arc spaces of
//! Pfaffian varieties.
//!
//! The crate works in two differential polynomial rings over the integers:
//! the ring of jet coordinates of skew-symmetric matrices, with generators
//! `x^(k)_{uv}` subject to `x_{vu} = -x_{uv}` and `x_{uu} = 0`, and the jet
//! coordinate ring of `p` copies of a symplectic vector space, with free
//! generators `a^(k)_{il}`. On top of the ring arithmetic it builds
//!
//! * Pfaffians of diagonal minors and their normalized derivatives
//!   ([`pfaffian`]),
//! * the combinatorics of derived Pfaffian sequences and their weighted
//!   lifts, including domination tests and largest dominating elements
//!   ([`order`]),
//! * standard monomials and their graded enumeration ([`standard`]),
//! * finite graded pieces of the quotient by a Pfaffian jet ideal, exact
//!   integer rank computations, basis certificates, straightening, and the
//!   two-factor relation families ([`quotient`]),
//! * the jet-invariant ring homomorphism, tableau leading terms, symplectic
//!   Lie algebra actions, and the corresponding verification batches
//!   ([`jet`]).
//!
//! All coefficients are arbitrary-precision integers; rank and solve steps
//! use fraction-free elimination so every certified statement is exact.
//! The `pfarc` binary exposes the verifications as subcommands emitting
//! machine-readable JSON reports.

pub mod cli;
pub mod config;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod order;
pub mod pfaffian;
pub mod quotient;
pub mod report;
pub mod ring;
pub mod standard;

pub use error::{Error, Result};
