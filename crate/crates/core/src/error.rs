//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated a precondition (non-finite value, out-of-range
    /// parameter, non-unitary entries, non-positive tolerance, ...).
    InvalidInput(String),
    /// A matrix offered as a density operator is not one (non-Hermitian,
    /// trace far from 1, or an eigenvalue below -1e-10).
    InvalidDensity(String),
    /// A scan or sweep was set up inconsistently, e.g. the varied axis
    /// targets the message parameter itself.
    InvalidConfiguration(String),
    /// A posterior was requested for an outcome whose marginal probability
    /// is zero under the given prior.
    ImpossibleOutcome,
    /// A computation left the domain where the result is defined.
    NumericalDomain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InvalidDensity(msg) => write!(f, "invalid density matrix: {msg}"),
            Error::InvalidConfiguration(msg) => write!(f, "invalid configuration: {msg}"),
            Error::ImpossibleOutcome => {
                write!(f, "posterior requested for an outcome of zero probability")
            }
            Error::NumericalDomain(msg) => write!(f, "numerical domain error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
