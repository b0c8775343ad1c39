use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator index {index} exceeds rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("unsupported rank {0}")]
    UnsupportedRank(usize),

    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),

    #[error("variable sets differ: [{0}] vs [{1}]")]
    VariableSetMismatch(String, String),

    #[error("reducible pair: {0}")]
    Reducible(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
