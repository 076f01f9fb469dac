use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightsError {
    #[error("weights must have exactly five entries, got {0}")]
    Arity(usize),
    #[error("weights must be positive")]
    NonPositive,
    #[error("a0 must be 1, got {0}")]
    LeadingWeight(i64),
    #[error("weights must be ascending")]
    NotAscending,
    #[error("not well formed: weights {0:?} share a common factor")]
    NotWellFormed([i64; 3]),
}

/// Problems reading or validating the family table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyDbError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("family {number}: {violation}")]
    Validation { number: i64, violation: String },
    #[error("expected 95 families, found {0}")]
    Count(usize),
    #[error("family {0} not found")]
    NotFound(i64),
    #[error("failed to read family table: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("family {number}: operation requires {expected}, family is {actual}")]
    WrongCase {
        number: i64,
        expected: &'static str,
        actual: &'static str,
    },
    #[error("family {number}: gcd(a1, a2) = 1, shared-factor check does not apply")]
    CoprimeLeadingWeights { number: i64 },
    #[error("family {number}: a{j} + 2 a4 = {lhs} differs from d = {d}")]
    NotTangentIndex {
        number: i64,
        j: usize,
        lhs: i64,
        d: i64,
    },
    #[error("family {number}: index {j} is not a tangent candidate (must be 0..=3)")]
    IndexOutOfRange { number: i64, j: usize },
    #[error("family {number}: reduced weight {weight} divides neither d - a4 = {d_minus_a4} nor d = {d}")]
    DivisibilityViolated {
        number: i64,
        weight: i64,
        d_minus_a4: i64,
        d: i64,
    },
}

/// Problems with the surface-method row table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("row {row}: family {family} is not in the database")]
    UnknownFamily { row: usize, family: i64 },
    #[error(
        "row {row} (family {family}): fails column {listed} but derived verdicts give {derived}"
    )]
    FailsMismatch {
        row: usize,
        family: i64,
        listed: String,
        derived: String,
    },
    #[error("row {row} (family {family}): certificate invalid: {detail}")]
    InvalidCertificate {
        row: usize,
        family: i64,
        detail: String,
    },
    #[error("{} row(s) failed:\n{}", .0.len(), .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))]
    Rows(Vec<TableError>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("test-class certificate for family {family} is not negative: value {value}")]
    NonNegativeTestClass { family: i64, value: String },
    #[error(transparent)]
    Family(#[from] FamilyDbError),
}
