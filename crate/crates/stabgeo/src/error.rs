use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("operator width {got} does not match {expected} qubits")]
    WidthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for {len}")]
    Index { index: usize, len: usize },
    #[error("generators do not commute: rows {0} and {1}")]
    NonCommuting(usize, usize),
    #[error("generators are not independent")]
    Dependent,
    #[error("generator has an imaginary phase")]
    ImaginaryPhase,
    #[error("row product has an imaginary phase")]
    OddPhase,
    #[error("matrix has {rows} rows but a pure state on {n} qubits is required")]
    NotPure { rows: usize, n: usize },
    #[error("cofactor is the zero vector")]
    ZeroCofactor,
    #[error("states are parallel")]
    Parallel,
    #[error("wedge product is not a stabilizer bivector")]
    NotStabilizerBivector,
    #[error("{what} is limited to {max} qubits, got {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
