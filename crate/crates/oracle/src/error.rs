use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("UnsupportedField: {0}")]
    UnsupportedField(String),
    #[error("TooLarge: {size} singular subspaces in one rank exceeds the cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("DimensionMismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("NotRegular: sampled degrees {0:?}")]
    NotRegular(Vec<u64>),
    #[error("BadExport: {0}")]
    BadExport(String),
    #[error(transparent)]
    Params(#[from] polar_core::Error),
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::UnsupportedField(_) => "UnsupportedField",
            OracleError::TooLarge { .. } => "TooLarge",
            OracleError::DimensionMismatch(..) => "DimensionMismatch",
            OracleError::NotRegular(_) => "NotRegular",
            OracleError::BadExport(_) => "BadExport",
            OracleError::Params(e) => e.name(),
        }
    }
}
