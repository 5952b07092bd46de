use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Jacobi identity fails on (x{}, x{}, x{}); defect {defect}", .triple.0, .triple.1, .triple.2)]
    JacobiViolation {
        /// 1-based basis indices.
        triple: (usize, usize, usize),
        /// The nonzero Jacobi sum, rendered as a coordinate vector.
        defect: String,
    },

    #[error("algebra is not nilpotent: lower central series stabilises at dimension {stable_dim}")]
    NotNilpotent { stable_dim: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket pair (x{i}, x{j}) must satisfy i < j")]
    BadPair { i: usize, j: usize },

    #[error("bracket pair (x{i}, x{j}) listed twice")]
    DuplicatePair { i: usize, j: usize },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not a central ideal")]
    NotCentralIdeal,

    #[error("identified vector is not central in its factor")]
    NotCentral,

    #[error("identified vectors are linearly dependent")]
    DependentIdentification,

    #[error("s undefined for abelian algebras")]
    AbelianInput,

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("unknown algebra name \"{0}\"")]
    UnknownName(String),

    #[error("parameter out of domain for {name}: {detail}")]
    ParamOutOfDomain { name: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// Short stable tag used as the first token of CLI error lines and as the
    /// basis of FFI error codes.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::JacobiViolation { .. } => "jacobi-violation",
            Error::NotNilpotent { .. } => "not-nilpotent",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::BadPair { .. } => "bad-pair",
            Error::DuplicatePair { .. } => "duplicate-pair",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::NotAnIdeal => "not-an-ideal",
            Error::NotCentralIdeal => "not-central-ideal",
            Error::NotCentral => "not-central",
            Error::DependentIdentification => "dependent-identification",
            Error::AbelianInput => "abelian-input",
            Error::PreconditionNotMet(_) => "precondition-not-met",
            Error::UnknownName(_) => "unknown-name",
            Error::ParamOutOfDomain { .. } => "param-out-of-domain",
            Error::Parse(_) => "parse-error",
            Error::Io(_) => "io-error",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
