use thiserror::Error;

use crate::hgpipeline::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable {var} is not part of the ambient variable set")]
    VariableMismatch { var: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("polynomial is not symmetric under t1 <-> t2")]
    NotSymmetric,

    #[error("classes live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("expected a class on {expected}, got one on {found}")]
    WrongRing { expected: String, found: String },

    #[error("invalid ring factor: {0}")]
    InvalidFactor(String),

    #[error("{what} index {index} out of range (allowed {lo}..={hi})")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        lo: i64,
        hi: i64,
    },

    #[error("operation requires a torus-equivariant class")]
    NotTorus,

    /// A pushforward produced a class not divisible by the expected degree.
    /// The target rings are torsion free, so this can only mean a broken
    /// pushforward rule.
    #[error("pushforward not divisible by {divisor}; pushforward rules are inconsistent")]
    ExactDivisionFailure { divisor: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("genus must be even and at least 2, got {0}")]
    InvalidGenus(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("verification of `{}` failed", .0.lemma)]
    VerificationFailed(Box<VerificationReport>),

    #[error("internal error: {0}")]
    Internal(String),
}
