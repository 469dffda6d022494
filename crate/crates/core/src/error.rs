use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator `{0}` has no assigned image")]
    MissingImage(String),

    #[error("presentation `{0}` has no meridian generator; conjugacy-constrained search requires a meridional presentation")]
    NotMeridional(String),

    #[error("presentation has {generators} generators but {relators} relators; expected deficiency one or a raw Wirtinger presentation")]
    BadDeficiency { generators: usize, relators: usize },

    #[error("denominator polynomial det \u{03a6}(x_j - 1) vanishes for column {0}; the deleted generator is not meridional")]
    ZeroDenominator(usize),

    #[error("search node limit exceeded after {visited} nodes")]
    NodeLimit { visited: u64 },

    #[error("q = 0 does not define a twist knot")]
    ZeroTwist,

    #[error("no identity oracle available for target presentation `{0}`")]
    NoOracle(String),

    #[error("{0}")]
    Unsupported(String),
}
