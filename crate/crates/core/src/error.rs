use std::fmt;

use thiserror::Error;

/// Which operand of a two-matrix check failed a precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    A,
    B,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::A => f.write_str("A"),
            Operand::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by the zero quaternion")]
    ZeroQuaternion,
    #[error("input contains NaN or infinite entries")]
    NonFinite,
    #[error("QR iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("matrix is numerically singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("conjugate-pair folding failed: residual {residual:.3e} exceeds {threshold:.3e}")]
    PairingFailure { residual: f64, threshold: f64 },
    #[error("matrix is not diagonalizable: {0}")]
    NotDiagonalizable(String),
    #[error("spectra have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("malformed conjugate pairing: {0}")]
    MalformedPairing(String),
    #[error("matrix {0} is not normal")]
    NotNormal(Operand),
    #[error("leading coefficient is singular")]
    SingularLeadingCoefficient,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("polynomial is not linear (degree {0})")]
    NotLinear(usize),
    #[error("spectrum routes disagree by {discrepancy:.3e} (threshold {threshold:.3e})")]
    CrossCheck { discrepancy: f64, threshold: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
