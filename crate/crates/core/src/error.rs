use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {0} is not bound")]
    MissingBinding(String),
    #[error("generator index {0} is outside the coframe")]
    UnknownGenerator(usize),
    #[error("form cannot be expressed in the frame: {0}")]
    NotInFrameSpan(String),
    #[error("frame change is singular")]
    SingularFrame,
    #[error("coefficient {0} does not stay polynomial after inverting the frame")]
    NonPolynomialCoefficient(String),
    #[error("expected a form of degree {expected}, found {found}")]
    DegreeError { expected: usize, found: String },
    #[error("quaternion has squared norm {0}, not 1")]
    NotUnit(String),
    #[error("d(phi) is not a constant multiple of *phi: {0}")]
    NotProportional(String),
    #[error("claimed solution {binding} fails: {constraint}")]
    ClaimFails { binding: String, constraint: String },
    #[error("structure equations do not satisfy d^2 = 0 on generator {0}")]
    NotIntegrable(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
