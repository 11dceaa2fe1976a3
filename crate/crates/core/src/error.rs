use thiserror::Error;

/// Errors raised by the analysis pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid local cohomology class: {0}")]
    InvalidClass(String),
    #[error("germ is not singular at the origin (f has a constant or linear term)")]
    NotSingularAtOrigin,
    #[error("singularity is not isolated: colength does not stabilize up to order {cutoff}")]
    NotIsolated { cutoff: usize },
    #[error("polynomial is not weighted homogeneous for the given weights")]
    NotQuasihomogeneousInput,
    #[error("nonzero trace {trace} on generator {index} of a non-quasihomogeneous isolated germ")]
    TraceObstructionFound { index: usize, trace: String },
    #[error("no kernel certificate found although every logarithmic field kills the class")]
    CertificateSearchFailed,
    #[error("certificate failed re-verification: {0}")]
    CertificateInvalid(String),
    #[error("corpus error: {0}")]
    Corpus(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
