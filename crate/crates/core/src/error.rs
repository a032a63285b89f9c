use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edge {edge:?} has {found} distinct vertices, expected {expected}")]
    WrongArity {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },

    #[error("edge {edge:?} has a vertex outside 0..{n}")]
    VertexOutOfRange { edge: Vec<usize>, n: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("pattern graph has no edges")]
    BadPattern,

    #[error("host contains no {t}-heavy copy of the pattern")]
    NoHeavyCopy { t: usize },

    #[error("multiplicity {t} is below the required threshold {required}")]
    ThresholdTooSmall { t: usize, required: usize },

    #[error("part {part} needs {needed} support sets but only {available} exist")]
    TooFewSupportSets {
        part: usize,
        needed: usize,
        available: u64,
    },

    #[error("seed is not regular: {0}")]
    SeedNotRegular(String),

    #[error("seed does not fit the multiplicity: {0}")]
    SeedMismatch(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no Steiner triple system on {n} points (need n = 1 or 3 mod 6)")]
    BadResidue { n: usize },

    #[error("input graph contains a K_{k}")]
    InputNotKkFree { k: usize },

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
}
