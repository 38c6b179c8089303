use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("malformed partition `{0}`")]
    ParsePartition(String),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition has {parts} nonzero parts, more than the ambient length {n}")]
    TooManyParts { parts: usize, n: usize },
    #[error("shift by {shift} makes a part negative")]
    NegativePart { shift: i64 },
    #[error("the alcove region needs n < p (got n = {n}, p = {p})")]
    RegionUndefined { n: usize, p: u32 },
    #[error("partition {0} does not lie in the fundamental alcove")]
    NotInAlcove(String),
    #[error("partition {0} is {1}-singular")]
    Singular(String, u32),
    #[error("column of length {len} needs more than {n} letters")]
    ColumnTooLong { len: usize, n: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),
    #[error("resource guard: {n}^{r} exceeds the limit {limit}")]
    GuardExceeded { n: usize, r: usize, limit: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("weight {weight:?} does not sum to {r}")]
    WeightMismatch { weight: Vec<u32>, r: usize },
    #[error("module is not closed under the symmetric group action")]
    NotClosed,
    #[error("malformed module file: {0}")]
    Format(String),
}
