use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("quiver has a loop at vertex {0}")]
    QuiverLoop(usize),

    #[error("unknown vertex or color {0}")]
    UnknownVertex(usize),

    #[error("invalid grid shape: {0}")]
    InvalidShape(String),

    #[error("({dims:?}; {ranks:?}) is not an irreducible component of the 2x2 grid")]
    InvalidComponent { dims: [u32; 4], ranks: [u32; 2] },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed representation: {0}")]
    Representation(String),

    #[error("rank profile {0:?} admits no nonnegative integer decomposition")]
    InconsistentProfile(Vec<i64>),

    #[error("truncation length {length} too short: support reached position {reached}; use a larger length")]
    Truncation { length: usize, reached: usize },

    #[error("weight bound {bound} is below the size {size} of a seed")]
    BoundBelowSeed { bound: u32, size: u32 },

    #[error("invalid sampling configuration: {0}")]
    SampleConfig(String),
}
