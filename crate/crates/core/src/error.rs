use thiserror::Error;

use crate::monomial::Block;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("generator `{0}` has a nonzero constant term; the ideal is the unit ideal")]
    UnitIdeal(String),

    #[error("generator `{generator}` of the {block} ideal mentions a variable outside its block")]
    MixedVariables { generator: String, block: Block },

    #[error("Betti input required: the {0} residual ideal is not usable by the monomial oracle; supply `{key}`", key = .0.betti_key())]
    BettiInputRequired(Block),

    #[error("oracle unsupported: {0}")]
    OracleUnsupported(String),

    #[error("monomial ideal has {count} generators, above the configured limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
