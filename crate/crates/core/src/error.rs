//! Error type shared across the crate.

use std::fmt;

/// Errors produced by ring, module and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error while parsing a polynomial, with byte position.
    Parse { pos: usize, msg: String },
    /// A variable name not declared in the ring.
    UnknownVariable { pos: usize, name: String },
    /// The requested modulus is not a prime number.
    NotPrime(u64),
    /// Operands live over different rings.
    RingMismatch,
    /// Operands live in different ambient free modules.
    AmbientMismatch,
    /// A value that must be homogeneous is not.
    Inhomogeneous(String),
    /// A morphism matrix does not map relations into relations.
    IllDefinedMorphism(String),
    /// An operation required a presentation with relations inside the
    /// irrelevant maximal ideal.
    NotMinimal(String),
    /// The operation is undefined on the zero module.
    ZeroModule(String),
    /// The coefficient prime is too small for a finite-dimensional
    /// algebra computation; raise it with the prime option.
    PrimeTooSmall { prime: u64, dim: usize },
    /// A stated precondition does not hold (reported, not a bug).
    Precondition(String),
    /// Internal consistency violation; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at byte {pos}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::AmbientMismatch => write!(f, "operands belong to different ambient modules"),
            Error::Inhomogeneous(what) => write!(f, "inhomogeneous input: {what}"),
            Error::IllDefinedMorphism(what) => write!(f, "ill-defined morphism: {what}"),
            Error::NotMinimal(what) => write!(f, "presentation not minimal: {what}"),
            Error::ZeroModule(what) => write!(f, "operation undefined on the zero module: {what}"),
            Error::PrimeTooSmall { prime, dim } => write!(
                f,
                "prime {prime} too small for algebra of dimension {dim}; rerun with a larger prime"
            ),
            Error::Precondition(what) => write!(f, "precondition failed: {what}"),
            Error::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
