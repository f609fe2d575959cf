//! Exact computations in the coefficient rings of topological K-theory,
//! and what they say about products of spheres.
//!
//! The crate has two halves that meet in [`classify`]:
//!
//! * the *obstruction* side: arbitrary-precision arithmetic in
//!   `KO^*(pt)`, `KU^*(pt)`, `KSp^*(pt)` and `KR^*(pt)` ([`ko`]),
//!   degreewise calculus of homogeneous ideals ([`ideal`]), and the
//!   derived invariants of spheres and their products ([`spheres`]);
//! * the *constructive* side: Hurwitz-Radon matrix families and nice
//!   normed bilinear maps, which realize regular maps
//!   `S^n × S^m → S^{n+m}` of odd degree as verified integer
//!   certificates ([`bilinear`]).
//!
//! Everything is exact: integer and rational arithmetic only, no
//! floating point. Every constructed object can be re-verified from
//! its serialized form.

pub mod bilinear;
pub mod classify;
pub mod expr;
pub mod ideal;
pub mod ko;
pub mod spheres;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),
    #[error("map rejected: {0}")]
    Rejected(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
