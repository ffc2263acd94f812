use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bundle {bundle} does not live on a {curve} curve")]
    KindMismatch { bundle: String, curve: String },
    #[error("outside the domain of validity: {0}")]
    Domain(String),
    #[error("unsupported curve kind: {0}")]
    Kind(String),
    #[error("divisors live on different surfaces F_{left} and F_{right}")]
    MixedSurface { left: i64, right: i64 },
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("negative intersection: {0}")]
    Negativity(String),
    #[error("invalid Maroni invariants (a, b) = ({a}, {b}) for genus {genus}")]
    Maroni { genus: i64, a: i64, b: i64 },
    #[error("out of range: {0}")]
    Range(String),
    #[error("weighted degree {numerator}/{denominator} is not an integer")]
    Integrality { numerator: String, denominator: String },
    #[error("no universal extension: {0}")]
    NoUniversal(String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("homogeneity violation: {0}")]
    Homogeneity(String),
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },
    #[error("corank of the multiplication map is not certified for {0}")]
    Undetermined(String),
    #[error("catalogue entry disagrees with the recomputed invariants: {0}")]
    CatalogueMismatch(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn kind(msg: impl Into<String>) -> Self {
        Error::Kind(msg.into())
    }
}
