use thiserror::Error;

/// Errors raised anywhere in the algebra stack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("variable-set mismatch: {left} vs {right} variables")]
    VariableMismatch { left: usize, right: usize },
    #[error("field mismatch")]
    FieldMismatch,
    #[error("inhomogeneous generator")]
    Inhomogeneous,
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("complex not in Perf^fl")]
    NotFiniteLength,
    #[error("projective dimension exceeds cap {cap} (infinite resolution suspected)")]
    ProjectiveDimensionExceedsCap { cap: usize },
    #[error("zero module")]
    ZeroModule,
    #[error("Adams splitting requires 2 invertible")]
    CharacteristicTwo,
    #[error("Frobenius requires positive characteristic")]
    CharacteristicZero,
    #[error("module is not cyclic")]
    NotCyclic,
    #[error("degree bound insufficient")]
    DegreeBoundInsufficient,
    #[error("d∘d ≠ 0 at homological degree {0}")]
    NotAComplex(i64),
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
