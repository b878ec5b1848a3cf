use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, ShtError>;

#[derive(Debug, Error)]
pub enum ShtError {
    #[error("invalid degree/order pair: l = {l}, m = {m} (need |m| <= l)")]
    InvalidDegreeOrder { l: usize, m: i64 },

    #[error("invalid order m = {m} for band-limit {bandlimit} (need |m| < L)")]
    InvalidOrder { m: i64, bandlimit: usize },

    #[error("invalid band-limit {0} (need L >= 1)")]
    InvalidBandlimit(usize),

    #[error("singular system at order m = {m}")]
    SingularSystem { m: i64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dense least-squares oracle is capped at L = {cap}, got L = {bandlimit}")]
    OracleCapExceeded { bandlimit: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("{}:{line}: {msg}", path.display())]
    Format {
        path: PathBuf,
        line: u64,
        msg: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("L = {bandlimit}, method = {method}, trial = {trial}: {source}")]
    Trial {
        bandlimit: usize,
        method: String,
        trial: usize,
        #[source]
        source: Box<ShtError>,
    },
}

impl ShtError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        ShtError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, line: u64, msg: impl Into<String>) -> Self {
        ShtError::Format {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }
}
