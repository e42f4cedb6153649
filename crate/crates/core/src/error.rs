use thiserror::Error;

use crate::lengths::{Bar, ClassKind};

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bar {bar} must be finite and positive, got {value}")]
    NonPositiveLength { bar: Bar, value: f64 },
    #[error("bar {bar} is not shorter than the sum of the other three")]
    QuadrilateralInequalityViolated { bar: Bar },
    #[error("({num}, {den}) is not a point of the projective line")]
    InvalidProjective { num: f64, den: f64 },
    #[error("elliptic modulus {0} is outside the supported range")]
    ModulusOutOfRange(f64),
    #[error("argument lies {distance:e} from a pole")]
    NearPole { distance: f64 },
    #[error("dc only attains values in [1, inf), got {value}")]
    TargetOutOfRange { value: f64 },
    #[error("operation needs {expected} lengths, got {actual}")]
    WrongClass { expected: &'static str, actual: ClassKind },
    #[error("all coefficients of the quadratic vanish")]
    DegenerateIdentically,
    #[error("branch {0} does not exist for these lengths")]
    NoSuchBranch(usize),
    #[error("parameter {s} lies outside the branch domain")]
    OutOfDomain { s: f64 },
    #[error("parametrized tangent has imaginary part {0:e}")]
    ImaginaryResidue(f64),
    #[error("parametrization and geometry disagree by {residual:e}")]
    ResidualTooLarge { residual: f64 },
    #[error("a tangent is zero or infinite, the sign test does not apply")]
    AngleAtInfinityOrZero,
    #[error("strip variant must be 1, 2, 3 or 4, got {0}")]
    InvalidVariant(u8),
}

pub type Result<T> = std::result::Result<T, Error>;
