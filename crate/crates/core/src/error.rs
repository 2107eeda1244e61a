use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("generator token 0 is not a generator")]
    ZeroToken,

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("crossing |{low},{high}| is not a valid strand pair for {strands} strands")]
    InvalidStrandPair {
        low: usize,
        high: usize,
        strands: usize,
    },

    /// 1-based position of the first crossing whose strands are not adjacent.
    #[error("invalid crossing at position {position}")]
    InvalidCrossing { position: usize },

    #[error("strand {strand} out of range for {strands} strands")]
    StrandOutOfRange { strand: usize, strands: usize },

    #[error("word is already gathered for strand {strand}")]
    AlreadyGathered { strand: usize },

    #[error("block w_{k} is not a reduced word whose crossings all involve strand {k}")]
    InvalidBlock { k: usize },

    #[error("no gathering rule matches at letter {position}")]
    NoRuleMatches { position: usize },

    #[error("rewrite pattern does not match at position {position}")]
    PatternMismatch { position: usize },

    #[error("step budget of {budget} exceeded")]
    StepBudgetExceeded { budget: usize },

    #[error("probability {0} is outside (0, 1]")]
    InvalidProbability(f64),

    #[error("expected {expected} stop probabilities, got {found}")]
    StopCountMismatch { expected: usize, found: usize },

    #[error("operation requires {expected} strands, got {found}")]
    WrongStrandCount { expected: usize, found: usize },

    #[error("input too large: {0}")]
    InputTooLarge(String),
}
