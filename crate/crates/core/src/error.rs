use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("RankTooSmall: rank n = {0} must be at least 3")]
    RankTooSmall(i64),
    #[error("RankTooLarge: rank n = {0} does not fit in 32 bits")]
    RankTooLarge(i64),
    #[error("BadLineOrder: s = {0} must be at least 2")]
    BadLineOrder(i64),
    #[error("BadTopOrder: no e in 0..=4 with t^2 = s^e (s = {s}, t = {t})")]
    BadTopOrder { s: i64, t: i64 },
    #[error("IndexOutOfRange: rank index {index} is outside 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("BadIntersectionDim: k = {k} is outside {lo}..={hi} for i = {i}")]
    BadIntersectionDim { i: u32, k: i32, lo: i32, hi: i32 },
    #[error("BadPair: expected i < j, got i = {i}, j = {j}")]
    BadPair { i: u32, j: u32 },
    #[error("NoValidS: no admissible s for e = {0}")]
    NoValidS(u8),
    #[error("BadHalfLog: e = {0} is outside 0..=4")]
    BadHalfLog(u8),
    #[error("InexactDivision: {0}")]
    InexactDivision(String),
}

impl Error {
    /// Stable variant name, used as the machine-readable error code.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::RankTooLarge(_) => "RankTooLarge",
            Error::BadLineOrder(_) => "BadLineOrder",
            Error::BadTopOrder { .. } => "BadTopOrder",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::BadIntersectionDim { .. } => "BadIntersectionDim",
            Error::BadPair { .. } => "BadPair",
            Error::NoValidS(_) => "NoValidS",
            Error::BadHalfLog(_) => "BadHalfLog",
            Error::InexactDivision(_) => "InexactDivision",
        }
    }
}
