use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid rank chain: {0}")]
    InvalidChain(String),

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange { what: &'static str, value: i64, range: String },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("modules live over different groups or fields: {0}")]
    GroupMismatch(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("not a flat pi-point: {0}")]
    NotFlat(String),

    #[error("module is not of constant rank: {0}")]
    NotConstantRank(String),

    #[error("module is not of constant Jordan type: {0}")]
    NotConstantJordanType(String),

    #[error("not a module homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("zero class: {0}")]
    ZeroClass(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "invalid-field",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::InvalidChain(_) => "invalid-chain",
            Error::OutOfRange { .. } => "out-of-range",
            Error::InvalidModule(_) => "invalid-module",
            Error::GroupMismatch(_) => "group-mismatch",
            Error::UnsupportedFamily(_) => "unsupported-family",
            Error::NotFlat(_) => "non-flat-point",
            Error::NotConstantRank(_) => "non-constant-rank",
            Error::NotConstantJordanType(_) => "non-constant-jordan-type",
            Error::NotHomomorphism(_) => "not-homomorphism",
            Error::ZeroClass(_) => "zero-class",
            Error::Parse(_) => "parse",
            Error::Json(_) => "json",
            Error::Internal(_) => "internal",
        }
    }

    /// The message without the category prefix.
    pub fn detail(&self) -> String {
        match self {
            Error::InvalidField(s)
            | Error::DimensionMismatch(s)
            | Error::InvalidChain(s)
            | Error::InvalidModule(s)
            | Error::GroupMismatch(s)
            | Error::UnsupportedFamily(s)
            | Error::NotFlat(s)
            | Error::NotConstantRank(s)
            | Error::NotConstantJordanType(s)
            | Error::NotHomomorphism(s)
            | Error::ZeroClass(s)
            | Error::Parse(s)
            | Error::Internal(s) => s.clone(),
            Error::Json(e) => e.to_string(),
            Error::OutOfRange { .. } => self.to_string(),
        }
    }

    pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, range: impl Into<String>) -> Self {
        Error::OutOfRange { what, value: value.try_into().unwrap_or(i64::MAX), range: range.into() }
    }
}
