use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid coefficient field: {0} is not a prime below 2^31")]
    InvalidField(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("matrix entry ({row}, {col}) has inconsistent degree")]
    DegreeInconsistent { row: usize, col: usize },
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("cannot form the quotient by the zero polynomial")]
    ZeroDivisor,
    #[error("index {index} lies beyond the truncation bound {bound}; value unknown")]
    BeyondBound { index: usize, bound: usize },
    #[error("ring is not Cohen-Macaulay")]
    NotCohenMacaulay,
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),
    #[error("statement {id} needs {what}")]
    MissingArgument { id: String, what: String },
    #[error("localization needs a monomial ring and a multigraded monomial presentation")]
    NotMonomial,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
