use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("unsupported group family `{0}`")]
    UnsupportedFamily(String),

    #[error("group order {order} exceeds the table cap of {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("subgroup is not normal in {0}")]
    NotNormal(String),

    #[error("subgroup is not central in {0}")]
    NotCentral(String),

    #[error("subgroup has the wrong isomorphism type: {0}")]
    WrongSubgroupType(String),

    #[error("conjugate of {b} by {t} does not lie in <{c}, {b}>")]
    NoConjugationSolution { c: String, b: String, t: String },

    #[error("guard violated: {0}")]
    Guard(String),

    #[error("map is not an automorphism of {0}")]
    NotAutomorphism(String),

    #[error("dimension mismatch: expected {expected} points, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a permutation: {0}")]
    InvalidPerm(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("permutation file, line {line}: {reason}")]
    Format { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
