use thiserror::Error;

/// Errors raised by the curve-germ and linear-algebra routines.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined order: the zero polynomial has no lowest term")]
    ZeroPolynomial,
    #[error("origin not on curve: constant term is {0}")]
    OriginNotOnCurve(String),
    #[error("jet bases differ: m = {left} vs m = {right}")]
    BasisMismatch { left: u32, right: u32 },
    #[error("invalid jet order m = 0 (m must be at least 1)")]
    InvalidJetOrder,
    #[error("invalid degree d = {0} (d must be at least 1)")]
    InvalidDegree(i64),
    #[error("degree bound violated: f has total degree {total} > d = {d}")]
    DegreeBound { total: u32, d: u32 },
    #[error("degree bound violated: d = {d} is smaller than the multiplicity m = {m}")]
    DegreeBelowMultiplicity { d: u32, m: u32 },
    #[error("multiplicity mismatch: declared m = {declared}, but order(f) = {actual}")]
    MultiplicityMismatch { declared: u32, actual: u32 },
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
