//! Eigenvalue-location bounds for three coefficient classes:
//! unitary coefficients and real doubly stochastic coefficients with
//! permutation `A_m`, `A_0` give `1/2 < |l| < 2`; a monic polynomial with
//! commuting lower coefficients whose eigenvalues lie in a disc of radius `r`
//! gives `|l| < r + 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{standard_eigenvalues_poly, QMatrixPolynomial};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::qmat::{commutes, is_unitary, standard_eigenvalues, QMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundClass {
    Unitary,
    DoublyStochastic,
    Commuting,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub class: BoundClass,
    pub eigenvalues: Vec<Complex64>,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Strict lower bound, absent for the disc class.
    pub lower: Option<f64>,
    pub upper: f64,
    /// `min_modulus - lower`.
    pub lower_margin: Option<f64>,
    /// `upper - max_modulus`.
    pub upper_margin: f64,
    /// Disc radius used for the commuting class.
    pub radius: Option<f64>,
    /// Every modulus inside the bounds by more than `tol.bound_margin`.
    pub holds: bool,
}

fn report(
    class: BoundClass,
    p: &QMatrixPolynomial,
    lower: Option<f64>,
    upper: f64,
    radius: Option<f64>,
    tol: &Tolerances,
) -> Result<BoundReport> {
    let eigenvalues = standard_eigenvalues_poly(p, tol)?.spectrum.values;
    let moduli = eigenvalues.iter().map(|z| z.norm());
    let min_modulus = moduli.clone().fold(f64::INFINITY, f64::min);
    let max_modulus = moduli.fold(0.0, f64::max);
    let lower_margin = lower.map(|l| min_modulus - l);
    let upper_margin = upper - max_modulus;
    let holds = upper_margin > tol.bound_margin && lower_margin.is_none_or(|m| m > tol.bound_margin);
    Ok(BoundReport { class, eigenvalues, min_modulus, max_modulus, lower, upper, lower_margin, upper_margin, radius, holds })
}

pub fn bound_check_unitary(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<BoundReport> {
    if let Some(i) = p.coefficients().iter().position(|a| !is_unitary(a, tol.structure)) {
        return Err(Error::PreconditionViolated(format!("coefficient A{i} is not unitary")));
    }
    report(BoundClass::Unitary, p, Some(0.5), 2.0, None, tol)
}

fn is_real(a: &QMatrix, tol: f64) -> bool {
    a.entries().iter().all(|q| q.a1.abs() <= tol && q.a2.abs() <= tol && q.a3.abs() <= tol)
}

fn is_doubly_stochastic(a: &QMatrix, tol: f64) -> bool {
    let n = a.rows();
    let nonneg = a.entries().iter().all(|q| q.a0 >= -tol);
    let rows = (0..n).all(|i| ((0..n).map(|j| a[(i, j)].a0).sum::<f64>() - 1.0).abs() <= tol);
    let cols = (0..n).all(|j| ((0..n).map(|i| a[(i, j)].a0).sum::<f64>() - 1.0).abs() <= tol);
    is_real(a, tol) && nonneg && rows && cols
}

fn is_permutation(a: &QMatrix, tol: f64) -> bool {
    is_doubly_stochastic(a, tol) && a.entries().iter().all(|q| q.a0.abs() <= tol || (q.a0 - 1.0).abs() <= tol)
}

pub fn bound_check_doubly_stochastic(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<BoundReport> {
    let t = tol.stochastic;
    if let Some(i) = p.coefficients().iter().position(|a| !is_doubly_stochastic(a, t)) {
        return Err(Error::PreconditionViolated(format!("coefficient A{i} is not real doubly stochastic")));
    }
    for i in [0, p.degree()] {
        if !is_permutation(&p.coefficients()[i], t) {
            return Err(Error::PreconditionViolated(format!("coefficient A{i} is not a permutation matrix")));
        }
    }
    report(BoundClass::DoublyStochastic, p, Some(0.5), 2.0, None, tol)
}

/// Largest standard-eigenvalue modulus over `A_0, ..., A_{m-1}`.
pub fn coefficient_radius(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<f64> {
    let mut r: f64 = 0.0;
    for a in &p.coefficients()[..p.degree()] {
        r = r.max(standard_eigenvalues(a, tol)?.values.iter().map(|z| z.norm()).fold(0.0, f64::max));
    }
    Ok(r)
}

/// With `r = None` the radius is computed from the coefficients; a supplied
/// radius must not be smaller than that.
pub fn bound_check_commuting_disc(p: &QMatrixPolynomial, r: Option<f64>, tol: &Tolerances) -> Result<BoundReport> {
    if !p.is_monic(tol.structure) {
        return Err(Error::PreconditionViolated(format!("A{} is not the identity: polynomial is not monic", p.degree())));
    }
    let lower = &p.coefficients()[..p.degree()];
    for i in 0..lower.len() {
        for j in i + 1..lower.len() {
            if !commutes(&lower[i], &lower[j], tol.structure) {
                return Err(Error::PreconditionViolated(format!("coefficients A{i} and A{j} do not commute")));
            }
        }
    }
    let computed = coefficient_radius(p, tol)?;
    let radius = match r {
        Some(r) if !(r.is_finite() && r >= 0.0) => {
            return Err(Error::PreconditionViolated(format!("radius {r} is not a nonnegative number")));
        }
        Some(r) if r < computed * (1.0 - tol.cross_check) - tol.cross_check => {
            return Err(Error::PreconditionViolated(format!(
                "coefficient eigenvalues reach modulus {computed:.6}, outside the disc of radius {r}"
            )));
        }
        Some(r) => r,
        None => computed,
    };
    report(BoundClass::Commuting, p, None, radius + 1.0, Some(radius), tol)
}

pub fn bound_check(p: &QMatrixPolynomial, class: BoundClass, r: Option<f64>, tol: &Tolerances) -> Result<BoundReport> {
    match class {
        BoundClass::Unitary => bound_check_unitary(p, tol),
        BoundClass::DoublyStochastic => bound_check_doubly_stochastic(p, tol),
        BoundClass::Commuting => bound_check_commuting_disc(p, r, tol),
    }
}
