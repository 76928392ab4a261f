use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter name `{0}`")]
    InvalidLetter(String),

    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("an automaton needs at least one state")]
    NoStates,

    #[error("state {state} is outside 0..{count}")]
    StateOutOfRange { state: usize, count: usize },

    #[error("missing transition for ({state}, {letter})")]
    MissingTransition { state: usize, letter: String },

    #[error("transition ({state}, {letter}) -> {target} is outside 0..{count}")]
    TargetOutOfRange {
        state: usize,
        letter: String,
        target: usize,
        count: usize,
    },

    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),

    #[error("transformation {0} maps a state to 0")]
    ReturningGenerator(String),

    #[error("element budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("witness needs n >= 4, got {0}")]
    WitnessTooSmall(usize),

    #[error("invalid dialect: {0}")]
    InvalidDialect(String),

    #[error("automaton is not minimal ({states} states, complexity {complexity})")]
    NotMinimal { states: usize, complexity: usize },

    #[error("{0:?} is not a subset of the state set")]
    SubsetOutOfRange(Vec<usize>),

    #[error("{0:?} does not define an atom")]
    NotAnAtom(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown operation `{0}`")]
    UnknownOperation(String),

    #[error("unknown claim `{id}`; valid ids: {valid}")]
    UnknownClaim { id: String, valid: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
