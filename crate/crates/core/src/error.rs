use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("inconsistent linear system (rank {rank})")]
    Inconsistent { rank: usize },
    #[error("underdetermined linear system (rank {rank} < {unknowns} unknowns)")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("genus {0} out of range (need g >= 2)")]
    Genus(u32),
    #[error("index i = {i} out of range for genus {g}")]
    IndexRange { g: u32, i: u32 },
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("replacement for {0:?} mentions the eliminated symbol")]
    SelfReferentialRelation(String),
    #[error("curve {0:?} has no committed intersection vector")]
    NoVector(String),
    #[error("class has non-uniform boundary coefficients; total-boundary curve data cannot pair with it")]
    NonUniformBoundary,
    #[error("ring mismatch: {left:?} vs {right:?}")]
    RingMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("class is not a linear (divisor) class")]
    NotLinear,
    #[error("factor {0} is not a P^1 factor")]
    NotBaseFactor(usize),
    #[error("lattice mismatch")]
    LatticeMismatch,
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("pencil class {0:?} is not ample on the base surface")]
    NotAmple(Vec<i64>),
    #[error("class is not pulled back from the base surface")]
    NotBasePullback,
    #[error("family has no exceptional sections")]
    NoSections,
    #[error("principal parts order must be >= 1, got {0}")]
    Order(u32),
    #[error("invalid partition {parts:?}: {reason}")]
    Partition { parts: Vec<u32>, reason: String },
    #[error("{0} is not a part of the partition")]
    NotAPart(u32),
    #[error("invalid Teichmuller parameters: {0}")]
    TeichParams(String),
    #[error("threshold denominator {value} is not positive at endpoint {endpoint}")]
    NonPositiveDenominator { endpoint: String, value: String },
    #[error("certificate multiplier must be positive, got {0}")]
    NonPositiveMultiplier(String),
    #[error("identity check failed: {0}")]
    Identity(String),
    #[error("expression error at byte {pos}: {msg}")]
    Expr { pos: usize, msg: String },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("catalog i/o: {0}")]
    Io(String),
    #[error("catalog format: {0}")]
    Format(String),
}
