use std::fmt;

use thiserror::Error;

/// Location-carrying syntax error from the text parsers.
///
/// `line` and `column` are 1-based. Single-monomial parses report line 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible ambient rings: width {left} vs width {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("ambient width {0} is outside 1..={max}", max = crate::MAX_N)]
    WidthOutOfRange(usize),

    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("monomial is divisible by x{index}*y{index}")]
    BooleanDivisible { index: usize },

    #[error("pseudomonomial uses index {index} both as x{index} and (1-x{index})")]
    NotPseudomonomial { index: usize },

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("the unit ideal is outside the neural-ideal domain")]
    UnitIdeal,

    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("generator {divisor} divides generator {multiple}")]
    DivisorPair { divisor: usize, multiple: usize },

    #[error("degenerate code: the empty code has no meaningful canonical form")]
    DegenerateCode,

    #[error("width {n} exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("placeholder z{z} is outside z1..z{k}")]
    PlaceholderOutOfRange { z: usize, k: usize },

    #[error("substitution for z{z} introduces shared index {index}")]
    InvalidSubstitution { z: usize, index: usize },

    #[error("substitution has {found} images but the ideal has {expected} placeholders")]
    SubstitutionArity { expected: usize, found: usize },

    #[error("group {0} is empty")]
    EmptyGroup(usize),

    #[error("malformed family: {0}")]
    MalformedFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
