use thiserror::Error;

/// Errors raised by the engine and its front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no leading term: the polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("occurrence does not match the leading monomial")]
    OccurrenceMismatch,

    #[error("monomial is irreducible: no occurrence of any relation")]
    Irreducible,

    #[error("reduction budget exhausted after {0} steps")]
    ReductionBudget(usize),

    #[error("polynomial is not below the ambiguity")]
    NotBelowAmbiguity,

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("monomial is outside the family: {0}")]
    NotInFamily(String),

    #[error("completion was truncated")]
    Truncated,

    #[error("relation is not a semiring binomial")]
    NotBinomial,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
