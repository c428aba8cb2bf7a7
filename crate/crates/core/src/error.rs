use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not an admissible prime: {1}")]
    BadPrime(u64, &'static str),
    #[error("polynomial is not a perfect square: {0}")]
    NotSquare(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid discriminant {0}")]
    InvalidDiscriminant(i64),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("structural invariant violated: {0}")]
    Structural(String),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("no cases selected")]
    NoCasesSelected,
    #[error("insufficient precision: {0}")]
    Precision(String),
    #[error("no admissible point found: {0}")]
    NoAdmissiblePoint(String),
}
