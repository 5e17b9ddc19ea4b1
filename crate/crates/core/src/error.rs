use std::fmt;

use crate::algebra::Var;

/// Errors raised by every module of the crate.
#[derive(Debug)]
pub enum Error {
    InexactDivision,
    DivisionByZero,
    UndefinedGcd,
    UnboundVariable(Var),
    Parse(String),
    NotAPartition(Vec<usize>),
    BoxOutOfDiagram { row: usize, col: usize, partition: String },
    NotContained { lam: String, mu: String },
    NotTwoRow { rows: usize },
    NotAdjacent { lam: String, kappa: String },
    EmptySkew,
    TooManyParts { parts: usize, vars: usize },
    ScaleLimit(String),
    DegenerateEigenvalue { lam: String, mu: String },
    InternalInconsistency(String),
    InvalidOverlap { u: usize, d: usize, m: usize },
    UnknownSuite(String),
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InexactDivision => write!(f, "divisor does not divide the dividend exactly"),
            Self::DivisionByZero => write!(f, "division by zero"),
            Self::UndefinedGcd => write!(f, "gcd of two zero polynomials is undefined"),
            Self::UnboundVariable(v) => write!(f, "variable {v} has no value"),
            Self::Parse(msg) => write!(f, "parse error: {msg}"),
            Self::NotAPartition(parts) => write!(f, "{parts:?} is not weakly decreasing"),
            Self::BoxOutOfDiagram { row, col, partition } => {
                write!(f, "box ({row},{col}) is not in the diagram of ({partition})")
            }
            Self::NotContained { lam, mu } => write!(f, "({mu}) is not contained in ({lam})"),
            Self::NotTwoRow { rows } => write!(f, "skew diagram spans {rows} rows, at most 2 allowed"),
            Self::NotAdjacent { lam, kappa } => {
                write!(f, "({kappa}) and ({lam}) do not differ by exactly one box")
            }
            Self::EmptySkew => write!(f, "skew diagram is empty"),
            Self::TooManyParts { parts, vars } => {
                write!(f, "partition has {parts} parts but only {vars} variables")
            }
            Self::ScaleLimit(msg) => write!(f, "scale limit exceeded: {msg}"),
            Self::DegenerateEigenvalue { lam, mu } => {
                write!(f, "eigenvalue gap between ({lam}) and ({mu}) vanishes")
            }
            Self::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            Self::InvalidOverlap { u, d, m } => {
                write!(f, "overlap m={m} is invalid for u={u}, d={d}")
            }
            Self::UnknownSuite(name) => write!(f, "unknown suite '{name}'"),
            Self::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Self::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Self::Io(err)
    }
}
