use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("function is not torus-invariant: monomial {monomial} has weight {weight:?}")]
    NotInvariant { monomial: String, weight: Vec<i64> },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("{count} ring variables exceed the stratification cap of {cap}")]
    TooManyVariables { count: usize, cap: usize },
    #[error("no positive-dimensional stabilizer on the semistable locus")]
    NoPositiveDimensionalStabilizer,
    #[error("invariant enumeration stopped at degree cap {cap} below the completeness bound {bound}")]
    DegreeCapReached { cap: u32, bound: u64 },
    #[error("row {0} is not in the ideal of the divisors")]
    NotInIdeal(usize),
    #[error("degree-2 generator `{0}` violates property (dagger): its differential does not vanish on the fixed locus")]
    DaggerViolation(String),
    #[error("reduction depth fuse of {0} exceeded")]
    DepthExceeded(usize),
    #[error("stabilizer dimension did not drop along an edge: parent {parent}, child {child} (chart {chart})")]
    StrictDecreaseViolated { parent: usize, child: usize, chart: String },
    #[error("generic rank undetermined: random evaluations gave {0:?}")]
    RankUndetermined(Vec<usize>),
    #[error("parse error at line {line}, column {column}: expected {}", expected.join(" | "))]
    Parse { line: usize, column: usize, expected: Vec<String> },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Process exit code for the command-line surface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::InvalidPresentation(_) | Error::DaggerViolation(_) => 1,
            Error::NotDivisible(_)
            | Error::NotInIdeal(_)
            | Error::DepthExceeded(_)
            | Error::StrictDecreaseViolated { .. }
            | Error::InvariantBreach(_) => 3,
            _ => 2,
        }
    }
}
