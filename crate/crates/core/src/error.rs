use thiserror::Error;

/// Errors shared across the toolkit.
///
/// Construction and solver preconditions are enforced eagerly, so a value of
/// any library type is always internally consistent.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("two-cycle between vertices {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("the same vertex {0} was given twice")]
    SameVertex(usize),
    #[error("size parameter must be positive")]
    ZeroSize,
    #[error("need at least {required}, got {actual}")]
    TooSmall { required: usize, actual: usize },
    #[error("power parameter k={k} needs cycle length at least {}, got {l}", 2 * k + 1)]
    NotOriented { l: usize, k: usize },
    #[error("every blow-up part must be non-empty")]
    ZeroPart,
    #[error("third part must have at least 2 vertices")]
    PartTooSmall,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("modulus {0} is divisible by three")]
    DivisibleByThree(i64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("gcd({h}, {delta}) > 1: no modular inverse")]
    NotCoprime { h: i64, delta: i64 },
    #[error("targets must sum to 0 mod h")]
    BadTargets,
    #[error("part sizes must sum to 0 mod the pattern order")]
    BadSizes,
    #[error("host graph is not a tournament")]
    NotTournament,
    #[error("sets do not partition the vertex set")]
    NotAPartition,
    #[error("sets must be disjoint")]
    Overlap,
    #[error("set size must be a multiple of the pattern order")]
    BadSize,
    #[error("demand exceeds the host vertex count")]
    BadDemand,
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search budget exhausted before the question was decided")]
    BudgetExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
