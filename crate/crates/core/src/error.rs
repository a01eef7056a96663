use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} outside the supported range 2..65536")]
    ModulusOutOfRange(u64),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("{op}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("binomial coefficient overflows 64 bits for nvars={nvars}, degree={degree}")]
    BinomialOverflow { nvars: usize, degree: usize },
    #[error("exponent vector has total degree {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("product of an empty sequence of linear forms")]
    EmptyProduct,
    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("invalid code shape k={k}, n={n}")]
    InvalidShape { k: usize, n: usize },
    #[error("received word is already a codeword")]
    AlreadyCodeword,
    #[error("cannot puncture all {0} columns")]
    PunctureAll(usize),
    #[error("cannot remove a row from a one-dimensional code")]
    SingleRow,
    #[error("degree {degree} out of range ({reason})")]
    DegreeOutOfRange { degree: usize, reason: &'static str },
    #[error("linear forms do not cut out a single point (solution space has dimension {0})")]
    NotAPoint(usize),
    #[error("Hilbert function did not stabilize by degree {cap}")]
    NoStabilization { cap: usize },
    #[error("oracle threshold exceeded: {size} messages > {threshold}")]
    OracleThreshold { size: u128, threshold: u64 },
    #[error("colon power {power} does not recover the nearest-neighbor point")]
    ColonPowerInsufficient { power: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
