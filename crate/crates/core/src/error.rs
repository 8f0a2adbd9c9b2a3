use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("covector {0} is not primitive")]
    NotPrimitive(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("vector {0} is not in kernel sublattice")]
    NotInKernel(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("syntax error at line {line}, position {pos}: {msg}")]
    Parse { line: usize, pos: usize, msg: String },
    #[error("Newton polytope undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty resultant (p + q = 0)")]
    EmptyResultant,
    #[error("declared degree {declared} is below actual degree {actual}")]
    DegreeTooSmall { declared: usize, actual: usize },
    #[error("no equations to eliminate against")]
    NoEquations,
    #[error("pivot equation is identically zero")]
    ZeroPivot,
    #[error("split not weakly generic for pivot Newton polytope: {0}")]
    NotWeaklyGeneric(String),
    #[error("fan is not complete: {0}")]
    IncompleteFan(String),
    #[error("malformed fan: {0}")]
    MalformedFan(String),
    #[error("tuple is not developed: {0}")]
    NotDeveloped(String),
    #[error("variety is empty: level {level} contains the unit equation {equation}")]
    EmptyVariety { level: usize, equation: String },
    #[error("codimension {k} exceeds ambient rank {n}")]
    CodimTooLarge { k: usize, n: usize },
    #[error("genericity failure: verify k or raise coefficient range ({attempts} attempts: {trace})")]
    GenericityFailure { attempts: usize, trace: String },
    #[error("expected {expected} polytopes, got {got}")]
    PolytopeCount { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
