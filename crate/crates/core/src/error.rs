use thiserror::Error;

use crate::Variant;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("value {value} is outside the unit interval")]
    OutOfRange { value: f64 },

    #[error("{operation} is not defined for variant {variant}")]
    VariantUnsupported {
        operation: &'static str,
        variant: Variant,
    },

    #[error("invalid index vector: {0}")]
    InvalidIndexes(String),
}
