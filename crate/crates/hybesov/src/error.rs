//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("grid size {0} is not a power of two >= 16")]
    BadGridSize(usize),
    #[error("spatial dimension {0} is not supported (only d = 1 or 2)")]
    BadDimension(usize),
    #[error("sample count {got} does not match grid ({want})")]
    SampleCountMismatch { got: usize, want: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("Lebesgue exponent p = {0} is out of range (need p >= 1 or p = inf)")]
    BadExponent(f64),
    #[error("medium regime index {index} out of range (R = {r})")]
    MediumIndexOutOfRange { index: usize, r: usize },
    #[error("bracket-regime norm requires an admissible sequence")]
    MissingSequence,
    #[error("sequence is not strictly increasing inside (2, p)")]
    SequenceNotIncreasing,
    #[error("empty exponent sequence")]
    EmptySequence,
    #[error("low-frequency exponent p = {0} must exceed 2")]
    BadLowExponent(f64),
    #[error("sequence violates admissibility: {0}")]
    InadmissibleSequence(String),
    #[error("relaxation parameter eps = {0} must be positive")]
    BadEps(f64),
    #[error("support-vanishing fraction a0 = {0} must lie in (0, 9/64)")]
    BadA0(f64),
    #[error("band fraction must lie in (0, 1]")]
    BadBandFraction,
    #[error("vacuum guard tripped: min(c + c_bar) = {0} fell below the threshold")]
    Vacuum(f64),
    #[error("nonpositive density (min = {0})")]
    NonpositiveDensity(f64),
    #[error("CFL violation: {0}")]
    Cfl(String),
    #[error("time step must be positive")]
    BadTimeStep,
    #[error("empty solution trace")]
    EmptyTrace,
    #[error("traces are not time-aligned")]
    MisalignedTraces,
    #[error("parameter {name} = {value} out of range {range}")]
    BadParameter {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("i/o failure: {0}")]
    Io(String),
    #[error("malformed field dump: {0}")]
    BadFieldDump(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
