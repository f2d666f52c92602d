use thiserror::Error;

/// Errors raised by library operations. Checks that can fail on valid input
/// (properness, goodness, probes) report through their return values instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("expansion budget exceeded: {needed} symbols requested, budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("level {level} is not reachable (construction defines levels 0..={max})")]
    Unreachable { level: usize, max: usize },
    #[error("index {index} out of range at level {level} (arity {arity})")]
    IndexOutOfRange { level: usize, index: usize, arity: usize },
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid directive sequence: {0}")]
    InvalidDirective(String),
    #[error("language not certified at n = {0}")]
    NotCertified(usize),
    #[error("criterion requires good level (level {0} is not good)")]
    NotGood(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("extend depth: {0}")]
    ExtendDepth(String),
    #[error("telescope further: {0}")]
    TelescopeFurther(String),
    #[error("code not locally constant at level {level}: {detail}")]
    NotLocallyConstant { level: usize, detail: String },
    #[error("edge count too small: {0}")]
    EdgeCountTooSmall(String),
    #[error("unknown gallery entry: {0}")]
    UnknownGallery(String),
    #[error("window too small")]
    WindowTooSmall,
}

pub type Result<T> = std::result::Result<T, Error>;
