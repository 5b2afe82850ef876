use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank n = {0} (need n >= 2)")]
    InvalidRank(usize),

    #[error("simple root index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vector has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} = {value} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("degree bounds differ: {0} vs {1}")]
    DegreeBoundMismatch(u32, u32),

    #[error("degree bound {bound} is below |2rho| = {min}")]
    DegreeTooSmall { bound: u32, min: u32 },

    #[error("cannot invert 1 - c e^theta along the zero direction")]
    NonInvertibleDirection,

    #[error("geometric factor must be a monomial, got {0}")]
    NotAMonomial(String),

    #[error("malformed stratum: partition weight exceeds alpha")]
    MalformedStratum,

    #[error("filtration type does not match the representation: {0}")]
    InconsistentType(String),

    #[error("filtration count depends on the field ({over_f2} over F2, {over_f3} over F3)")]
    NotRigid { over_f2: u64, over_f3: u64 },

    #[error("symbolic count {symbolic} disagrees with finite-field count over F{field}: {brute}")]
    OracleDisagreement {
        field: u64,
        symbolic: String,
        brute: u64,
    },
}
