use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("oracle limit exceeded: {what} needs n = {n}, bound is {bound} (raise the bound or lower n)")]
    OracleLimit { what: String, n: usize, bound: usize },
    #[error("series inversion: {0}")]
    SeriesInversion(String),
    #[error("series composition: {0}")]
    Composition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
