use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("duplicate variable `{0}` in ring declaration")]
    DuplicateVariable(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("monomial arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("input is not homogeneous")]
    NonHomogeneous,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("points are not in general linear position")]
    NotGeneralPosition,
    #[error("monomial-ideal recursion exceeded {0} nodes")]
    RecursionLimit(usize),
    #[error("rejection sampling budget of {0} draws exhausted")]
    SamplingBudget(usize),
    #[error("J is not contained in I")]
    NotContained,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(
        "relation type exceeds bound {bound} (a minimal relation of fiber degree {found} exists)"
    )]
    BoundExceeded { bound: usize, found: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
