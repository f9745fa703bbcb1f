use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::series::SeriesError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("reduction table: {0}")]
    Table(String),
    #[error("numeric evaluation: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_nk(n: u32, k: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(format!("weight n must be positive, got {n}")));
    }
    if k + 1 > n {
        return Err(Error::Domain(format!("need k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}
