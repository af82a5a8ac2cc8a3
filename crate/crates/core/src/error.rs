use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two families: malformed input ([`Error::Parse`],
/// [`Error::DimensionMismatch`], [`Error::MalformedTable`]) and honest
/// mathematical precondition failures (everything else). The CLI maps the
/// first family to exit code 2 and the second to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),

    #[error("linear system has no solution")]
    NoSolution,
    #[error("prime {0} is unsuitable for modular factorization")]
    BadPrime(u64),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitLaw(usize),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("algebra is not simple")]
    NotSimple,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("ideal is not nilpotent")]
    NotNilpotent,
    #[error("index of simple factor {0} is unknown and was not asserted")]
    UnknownIndex(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("rank {0} is not realizable")]
    RankNotRealizable(String),
    #[error("{0} does not divide {1}")]
    NotDivisor(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

impl Error {
    /// True for malformed-input errors, false for mathematical precondition violations.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::DimensionMismatch { .. } | Error::MalformedTable(_)
        )
    }

    /// Stable machine-readable code used in JSON error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::MalformedTable(_) => "malformed_table",
            Error::NoSolution => "no_solution",
            Error::BadPrime(_) => "bad_prime",
            Error::NonAssociative(..) => "non_associative",
            Error::UnitLaw(_) => "unit_law",
            Error::NotAnIdeal => "not_an_ideal",
            Error::NotSemisimple => "not_semisimple",
            Error::NotSimple => "not_simple",
            Error::NotIdempotent => "not_idempotent",
            Error::NotNilpotent => "not_nilpotent",
            Error::UnknownIndex(_) => "unknown_index",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::RankNotRealizable(_) => "rank_not_realizable",
            Error::NotDivisor(..) => "not_divisor",
            Error::NotPrime(_) => "not_prime",
            Error::OutOfRange(_) => "out_of_range",
            Error::SearchExhausted(_) => "search_exhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
