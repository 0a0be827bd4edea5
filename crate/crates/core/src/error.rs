use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("generator index out of range at token {position}: |{index}| not in [1, {max}]")]
    Range {
        position: usize,
        index: i64,
        max: usize,
    },

    #[error("invalid strand count {0}: need at least 2")]
    StrandCount(usize),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),

    #[error("not realizable: {0}")]
    Realizability(String),

    #[error("invalid matrix: {0}")]
    Matrix(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("unsupported root system type {0:?}")]
    RootType(String),

    #[error("presentation invalid: {0}")]
    Presentation(String),

    #[error("permutation representation violates the relation {0}")]
    RelationViolated(String),

    #[error("enumeration budget exceeded: about {estimate} states needed, budget is {budget}")]
    Budget { estimate: u128, budget: u128 },

    #[error("estimation failed: {0}")]
    Estimation(String),
}

impl Error {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Range { .. } => "range",
            Error::StrandCount(_) => "strand_count",
            Error::Permutation(_) => "permutation",
            Error::Dimension { .. } => "dimension",
            Error::UnsupportedRank(_) => "unsupported_rank",
            Error::Realizability(_) => "realizability",
            Error::Matrix(_) => "matrix",
            Error::Index(_) => "index",
            Error::RootType(_) => "root_type",
            Error::Presentation(_) => "presentation",
            Error::RelationViolated(_) => "relation_violated",
            Error::Budget { .. } => "budget",
            Error::Estimation(_) => "estimation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
