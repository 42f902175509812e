use thiserror::Error;

use crate::monomial::{ExponentVector, MultiIndex};

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero ideal is not allowed (no generators given)")]
    ZeroIdeal,

    #[error("input ideal is the unit ideal (contains the monomial 1)")]
    UnitIdealInput,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed linear system: {0}")]
    MalformedSystem(String),

    #[error("multi-index has total degree zero")]
    ZeroTotalDegree,

    #[error("Newton polyhedron has no points")]
    EmptyPolyhedron,

    #[error("growth window N = {0} is too small (need N >= 4)")]
    WindowTooSmall(u32),

    #[error("ell = {ell} is below the threshold lambda - 1 = {}", .lambda - 1)]
    EllBelowThreshold { ell: u32, lambda: u32 },

    #[error("truncation cap {cap} is too small (need at least {required})")]
    CapTooSmall { cap: u32, required: u32 },

    #[error("invalid partition: {0}")]
    BadPartition(String),

    #[error("invalid reduction candidate: {0}")]
    InvalidCandidate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("certifier and oracle disagree: {0}")]
    InconsistencyDetected(Box<Inconsistency>),
}

/// The two reports that failed to agree in a cross-validation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistency {
    pub certificate: crate::certifier::Certificate,
    pub oracle: crate::oracle::OracleReport,
}

impl std::fmt::Display for Inconsistency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "certificate verdict {:?} (witness index {:?}) vs {} oracle violation(s) up to total degree {}",
            self.certificate.verdict,
            self.certificate.witness_index.as_ref().map(MultiIndex::entries),
            self.oracle.violations.len(),
            self.oracle.max_total_degree
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[allow(dead_code)]
pub(crate) fn check_vector_dim(expected: usize, b: &ExponentVector) -> Result<()> {
    check_dim(expected, b.dim())
}
