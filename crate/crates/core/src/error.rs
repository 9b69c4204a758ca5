use thiserror::Error;

use crate::pbw::JacobiViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("multiplication oracles or orders differ")]
    OracleMismatch,
    #[error("alphabet sizes differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("word is not a basis word: {0}")]
    BasisViolation(String),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("overlap enumeration requires nonempty words")]
    EmptyWord,
    #[error("generator {index} has leading coefficient {coeff}, which is not a unit")]
    NotUnital { index: usize, coeff: String },
    #[error("division exceeded its step budget of {0}")]
    BudgetExceeded(usize),
    #[error("generator set is not a Gröbner basis ({failures} failing S-polynomials)")]
    NotAGroebnerBasis { failures: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("S-polynomial remainder has non-unit leading coefficient {0}")]
    NonUnitalRemainder(String),
    #[error("completion did not stabilise within {0} rounds")]
    RoundsExceeded(usize),
    #[error("not a Lie algebra: {} Jacobi violations", .0.len())]
    InvalidLie(Vec<JacobiViolation>),
    #[error("degree bound {bound} is below the generator degree {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    /// Re-anchors a single-line parse error onto `line` of a larger input,
    /// shifting the column by `offset`.
    pub fn at_line(self, line: usize, offset: usize) -> Self {
        match self {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line,
                column: column + offset,
                message,
            },
            other => other,
        }
    }
}
