use thiserror::Error;

use crate::exactla::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed fields in one computation: {0} and {1}")]
    FieldMismatch(Field, Field),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("malformed matrix: {0}")]
    Structure(String),

    #[error("not a complex: composed differential is nonzero")]
    NotAComplex,

    #[error("void complex has no chain complex")]
    VoidComplex,

    #[error("{what} has size {size}, above the supported cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid ring or ideal: {0}")]
    InvalidIdeal(String),

    #[error("ideal is not squarefree: generator {0}")]
    NotSquarefree(String),

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("inconclusive at degree cap {cap}: nonzero Betti number at total degree {degree}; raise degree_cap")]
    InconclusiveAtCap { cap: u32, degree: u32 },

    #[error("Betti table does not cover degree {0}; compute it with a larger scan")]
    IncompleteTable(String),

    #[error("degenerate ideal for specialization: some generator vanished after {0} draws")]
    DegenerateSpecialization(usize),

    #[error("invalid free complex: {0}")]
    InvalidFreeComplex(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
