use thiserror::Error;

use crate::surfaces::CurveId;

/// Errors raised by the library. Every variant describes rejected input or
/// a failed internal consistency check; nothing here is retried.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("neighborhood surface is only defined for square packings, got {rows}x{cols}")]
    NonSquarePacking { rows: usize, cols: usize },

    #[error("curve {0} is not part of the curve system")]
    UnknownCurve(CurveId),

    #[error("boundary component d{index} does not exist on a fiber with {boundary_count} boundary components")]
    UnknownBoundary { index: usize, boundary_count: usize },

    #[error("pairing matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("pattern occurrence #{occurrence} not found ({found} occurrences in a word of length {word_len}, pattern length {pattern_len})")]
    PatternNotFound {
        occurrence: usize,
        found: usize,
        word_len: usize,
        pattern_len: usize,
    },

    #[error("{numerator}/{denominator} is not a positive coprime fraction")]
    BadFraction { numerator: i64, denominator: i64 },

    #[error("branched cover signature {numerator}/{denominator} is not an integer")]
    NonIntegralSignature { numerator: i64, denominator: i64 },

    #[error("binding vector unknown for fibration kind {0}")]
    BindingVectorUnknown(String),

    #[error("({0}) does not embed monotonically into ({1})")]
    NonMonotoneEmbedding(String, String),

    #[error("no resolution-graph assembly for x^{p}+y^{q} plumbs to S^3")]
    ResolutionValidation { p: i64, q: i64 },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require(name: &'static str, value: i64, min: i64) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter {
            name,
            value,
            reason: if min == 1 {
                "must be positive"
            } else if min == 2 {
                "must be at least 2"
            } else {
                "below the allowed minimum"
            },
        });
    }
    Ok(())
}
