use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{k} is not coprime to {n}")]
    NotCoprime { k: i64, n: u64 },
    #[error("modulus mismatch: subgroup modulus {subgroup}, element order {element}")]
    ModulusMismatch { subgroup: u64, element: u64 },
    #[error("zero polynomial has no valuation")]
    ZeroPolynomial,
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<i64>),
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{ell} divides {value}")]
    Divisible { ell: u64, value: i64 },
    #[error("{d} does not divide {n}")]
    NotDivisor { d: u64, n: u64 },
    #[error("beta-set length {length} is smaller than {parts} parts")]
    BetaSetTooShort { length: usize, parts: usize },
    #[error("bead {0} is not in the beta-set")]
    MissingBead(i64),
    #[error("moving bead {bead} by {d} gives a negative position")]
    NegativeBead { bead: i64, d: u64 },
    #[error("moving bead {bead} by {d} collides with an occupied position")]
    BeadCollision { bead: i64, d: u64 },
    #[error("{0} must be even")]
    NotEven(u64),
    #[error("{0} must be odd")]
    NotOdd(u64),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(i64, i64),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("rank {rank} exceeds the supported bound {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("zero is not a valid field element here")]
    ZeroElement,
    #[error("malformed data: {0}")]
    Data(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown query kind '{0}'")]
    UnknownQuery(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
