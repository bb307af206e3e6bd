use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
///
/// The `code` method returns the stable identifier used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("layout has no indices: all six block sizes are zero")]
    EmptyLayout,
    #[error("index {index} outside 0..={max}")]
    IndexRange { index: usize, max: usize },
    #[error("operand does not belong to this configuration: {0}")]
    ConfigMismatch(String),
    #[error("vector {0} is not in the lattice")]
    NotInGamma(String),
    #[error("key is not in the nilpotent class A1")]
    NotA1,
    #[error("configuration already has sigma0 = 0")]
    AlreadyNormalized,
    #[error("the {n}-th root of {value} is not rational")]
    RootNotRational { n: u64, value: String },
    #[error("lattice mismatch: {0}")]
    GammaMismatch(String),
    #[error("layout or monoid mismatch: {0}")]
    LayoutMismatch(String),
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyLayout => "E_EMPTY_LAYOUT",
            Error::IndexRange { .. } => "E_INDEX_RANGE",
            Error::ConfigMismatch(_) => "E_CONFIG_MISMATCH",
            Error::NotInGamma(_) => "E_NOT_IN_GAMMA",
            Error::NotA1 => "E_NOT_A1",
            Error::AlreadyNormalized => "E_ALREADY_NORMALIZED",
            Error::RootNotRational { .. } => "E_ROOT_NOT_RATIONAL",
            Error::GammaMismatch(_) => "E_GAMMA_MISMATCH",
            Error::LayoutMismatch(_) => "E_LAYOUT_MISMATCH",
            Error::Arity { .. } => "E_ARITY",
            Error::InvalidAutomorphism(_) => "E_INVALID_AUTOMORPHISM",
            Error::Parse(_) => "E_PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
