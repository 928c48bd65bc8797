use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("identifier `{name}` at {line}:{column} uses a reserved prefix")]
    ReservedIdentifier {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("malformed clause file, line {line}: {message}")]
    ClauseFile { line: usize, message: String },

    #[error("pivot `{pivot}` does not occur with opposite polarities in the parent clauses")]
    PivotAbsent { pivot: String },

    #[error("clause kinds are incompatible: {0}")]
    KindMismatch(String),

    #[error("rewrite of a step clause requires an empty right-hand side")]
    NonEmptyNext,

    #[error("loop search width {width} exceeds the cap of {cap}")]
    LoopWidthExceeded { width: usize, cap: usize },

    #[error("entailment over {symbols} symbols exceeds the cap of {cap}")]
    EntailmentCapExceeded { symbols: usize, cap: usize },

    #[error("behaviour graph over {symbols} symbols exceeds the cap of {cap}")]
    OracleCapExceeded { symbols: usize, cap: usize },

    #[error("formula is not propositional: {0}")]
    NotPropositional(String),

    #[error("model extraction requires a non-empty reduced graph")]
    EmptyGraph,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Resource exhaustion, as opposed to bad input or a bug.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::LoopWidthExceeded { .. }
                | Error::EntailmentCapExceeded { .. }
                | Error::OracleCapExceeded { .. }
        )
    }

    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::ReservedIdentifier { .. } | Error::ClauseFile { .. }
        )
    }
}
