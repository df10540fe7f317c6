use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unrecognized token {token:?} at byte {position}; expected one of a, A, b, B")]
pub struct ParseWordError {
    pub token: char,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("radius {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("row n={n}: enumerated {field} = {enumerated}, closed form gives {expected}")]
    Mismatch {
        n: usize,
        field: &'static str,
        enumerated: String,
        expected: String,
    },
    #[error("failed to build a thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator constant term {0} is not a unit")]
    NonUnitConstant(String),
}
