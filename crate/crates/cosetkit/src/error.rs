//! Error type shared across the toolkit.

use thiserror::Error;

/// Errors produced by toolkit operations.
///
/// Usage-level failures (bad indices, size guards) are kept distinct from
/// theory-level failures ([`Error::TheoryViolation`]): the command-line front
/// end maps the former to exit code 2 and the latter to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two series offsets differ by a non-integer, so their coefficient grids
    /// cannot be aligned.
    #[error("incompatible series offsets {0} and {1}: difference is not an integer")]
    IncompatibleOffset(String, String),

    /// Attempt to invert a series whose leading coefficient is not invertible.
    #[error("series is not a unit: {0}")]
    NotAUnit(String),

    /// An index or parameter lies outside its documented range.
    #[error("index out of range: {0}")]
    BadIndex(String),

    /// A computation guard was exceeded (dimension or truncation order too large).
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// An exact check that the underlying theory guarantees has failed.
    /// Any occurrence on an unmodified build is a bug worth reporting.
    #[error("theory violation: {0}")]
    TheoryViolation(String),

    /// A module label violates its parity or range constraints.
    #[error("bad label: {0}")]
    BadLabel(String),

    /// An exact division or normalization left an unexpected remainder.
    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    /// A bounded search ended with an empty candidate set.
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    /// A series was identically zero to its truncation order, so no leading
    /// data can be read off.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
