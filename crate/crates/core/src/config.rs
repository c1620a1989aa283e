//! Numerical tolerances shared by every module.
//!
//! All thresholds live in one record so that a single `--tol NAME=VALUE`
//! override from the command line reaches every kernel that uses it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute tolerance for quaternion scalar equality and similarity.
    pub scalar: f64,
    /// Relative subdiagonal size at which the QR iteration deflates.
    pub deflation: f64,
    /// Upper bound on the relative eigenvector residual.
    pub eig_residual: f64,
    /// Relative asymmetry accepted by the Hermitian eigensolver.
    pub hermitian: f64,
    /// Relative off-diagonal norm at which Jacobi sweeps stop.
    pub jacobi: f64,
    /// Singular values below `rank * sigma_max` count as zero.
    pub rank: f64,
    /// LU pivots below `singular * ||A||_F` are rejected.
    pub singular: f64,
    /// Relative residual allowed when folding conjugate eigenvalue pairs.
    pub pairing: f64,
    /// Imaginary parts of modulus at most `real_clamp` are clamped to zero.
    pub real_clamp: f64,
    /// Relative distance under which eigenvalues are grouped as repeated.
    pub cluster: f64,
    /// Relative singular-value threshold for geometric multiplicity.
    pub null_space: f64,
    /// Relative residual accepted for `X^-1 A X = D`.
    pub diag_verify: f64,
    /// Relative residual for structural predicates (normal, unitary, ...).
    pub structure: f64,
    /// Slack used when deciding whether an inequality holds.
    pub inequality: f64,
    /// Strictness margin for eigenvalue-location bounds.
    pub bound_margin: f64,
    /// Entry tolerance for doubly stochastic and permutation tests.
    pub stochastic: f64,
    /// Agreement between the two spectrum routes for polynomials.
    pub cross_check: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            scalar: 1e-10,
            deflation: 1e-12,
            eig_residual: 1e-8,
            hermitian: 1e-10,
            jacobi: 1e-12,
            rank: 1e-10,
            singular: 1e-13,
            pairing: 1e-6,
            real_clamp: 1e-10,
            cluster: 1e-6,
            null_space: 1e-8,
            diag_verify: 1e-6,
            structure: 1e-8,
            inequality: 1e-9,
            bound_margin: 1e-9,
            stochastic: 1e-10,
            cross_check: 1e-6,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 17] = [
        "scalar",
        "deflation",
        "eig_residual",
        "hermitian",
        "jacobi",
        "rank",
        "singular",
        "pairing",
        "real_clamp",
        "cluster",
        "null_space",
        "diag_verify",
        "structure",
        "inequality",
        "bound_margin",
        "stochastic",
        "cross_check",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "scalar" => &mut self.scalar,
            "deflation" => &mut self.deflation,
            "eig_residual" => &mut self.eig_residual,
            "hermitian" => &mut self.hermitian,
            "jacobi" => &mut self.jacobi,
            "rank" => &mut self.rank,
            "singular" => &mut self.singular,
            "pairing" => &mut self.pairing,
            "real_clamp" => &mut self.real_clamp,
            "cluster" => &mut self.cluster,
            "null_space" => &mut self.null_space,
            "diag_verify" => &mut self.diag_verify,
            "structure" => &mut self.structure,
            "inequality" => &mut self.inequality,
            "bound_margin" => &mut self.bound_margin,
            "stochastic" => &mut self.stochastic,
            "cross_check" => &mut self.cross_check,
            _ => return None,
        })
    }

    /// Overrides one named tolerance. Values must be positive and finite.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::PreconditionViolated(format!(
                "tolerance {name} must be positive, got {value}"
            )));
        }
        let slot = self.slot(name).ok_or_else(|| {
            Error::PreconditionViolated(format!("unknown tolerance name {name:?}"))
        })?;
        *slot = value;
        Ok(())
    }

    /// Parses a `NAME=VALUE` override and applies it.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec.split_once('=').ok_or_else(|| {
            Error::PreconditionViolated(format!("tolerance override {spec:?} is not NAME=VALUE"))
        })?;
        let value: f64 = value.trim().parse().map_err(|_| {
            Error::PreconditionViolated(format!("tolerance value {value:?} is not a number"))
        })?;
        self.set(name.trim(), value)
    }
}
