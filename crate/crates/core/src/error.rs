use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ambient size mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {degree} out of range for n = {n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ambient size {0} exceeds the supported maximum")]
    TooManyVariables(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("complex is not shifted")]
    NotShifted,
    #[error("complex does not contain every vertex")]
    NotFullSupport,
    #[error("unit generator: the ideal is not proper")]
    UnitGenerator,
    #[error("ring flavor mismatch: {0}")]
    RingMismatch(String),
    #[error("stability violation: {0}")]
    StabilityViolation(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("transform is singular")]
    SingularTransform,
    #[error("linear forms are linearly dependent")]
    DependentSequence,
    #[error("genericity failure: {0}")]
    GenericityFailure(String),
    #[error("shifting routes disagree: {0}")]
    ShiftMismatch(String),
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("infeasible parameters: {0}")]
    ParameterInfeasible(String),
    #[error("verification failure: {0}")]
    VerificationFailure(String),
    #[error("empty Betti table")]
    EmptyTable,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Process exit status: 2 parse, 3 genericity, 4 verification, 1 for
    /// any other rejected input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::GenericityFailure(_) | Error::ShiftMismatch(_) => 3,
            Error::VerificationFailure(_) | Error::ConsistencyFailure(_) => 4,
            _ => 1,
        }
    }
}
