//! Exact verification toolkit for commutant algebras of diagonal affine
//! sl2 actions on tensor powers of the level-1 free-fermion-type lattice
//! vertex algebra.
//!
//! All arithmetic is exact rational arithmetic; series are explicitly
//! truncated with tracked windows of validity, so every equality the crate
//! reports is an exact statement about the tracked coefficients.

pub mod characters;
pub mod classifier;
pub mod error;
pub mod griess;
pub mod linalg;
pub mod minimal_model;
pub mod rational;
pub mod series;
pub mod symmetric_group;

pub use error::{Error, Result};
pub use rational::{rat, Rational};
