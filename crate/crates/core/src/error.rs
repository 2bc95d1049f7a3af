use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found} (point {index})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("empty input")]
    EmptyInput,
    #[error("non-finite coordinate at point {0}")]
    NonFinite(usize),
    #[error("need n > k >= 1, got n = {n}, k = {k}")]
    SampleSize { n: usize, k: usize },
    #[error("data not in general position; witness subset {witness:?}")]
    NotGeneralPosition { witness: Vec<usize> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate scale: every probed direction has zero MAD and zero deviation")]
    DegenerateScale,
    #[error("combinatorial budget exceeded: {count} subsets > {limit}")]
    CombinatorialBudget { count: u128, limit: u128 },
    #[error("every candidate subset has a singular covariance matrix")]
    SingularCovariance,
    #[error("estimate lies outside every admissible halfspace; no facet qualifies")]
    NoAdmissibleFacet,
    #[error("no admissible direction found for h = {0}")]
    NoAdmissibleDirection(usize),
    #[error("general position could not be restored for any grid value")]
    GeneralPositionUnrecoverable,
    #[error("unknown estimator '{0}'")]
    UnknownEstimator(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("parse error at row {row}, column {column}: '{value}'")]
    Parse {
        row: usize,
        column: usize,
        value: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
