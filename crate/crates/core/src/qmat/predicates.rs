//! Residual-based structural predicates. Each takes a relative tolerance.

use super::QMatrix;
use crate::clinalg::{self, CMatrix};
use crate::config::Tolerances;

/// `||AA* - A*A||_F <= tol (1 + ||A||_F^2)`.
pub fn is_normal(a: &QMatrix, tol: f64) -> bool {
    if !a.is_square() {
        return false;
    }
    let ah = a.conj_transpose();
    let r = (&(a * &ah) - &(&ah * a)).frobenius_norm();
    r <= tol * (1.0 + a.frobenius_norm().powi(2))
}

/// `||A - A*||_F <= tol (1 + ||A||_F)`.
pub fn is_hermitian(a: &QMatrix, tol: f64) -> bool {
    a.is_square() && (a - &a.conj_transpose()).frobenius_norm() <= tol * (1.0 + a.frobenius_norm())
}

/// Both `AA*` and `A*A` within `tol (1 + ||A||_F^2)` of the identity.
pub fn is_unitary(a: &QMatrix, tol: f64) -> bool {
    if !a.is_square() {
        return false;
    }
    let ah = a.conj_transpose();
    let id = QMatrix::identity(a.rows());
    let bound = tol * (1.0 + a.frobenius_norm().powi(2));
    (&(a * &ah) - &id).frobenius_norm() <= bound && (&(&ah * a) - &id).frobenius_norm() <= bound
}

/// Hermitian with smallest eigenvalue of `chi(A)` at least `-tol (1 + ||A||_F)`.
pub fn is_positive_semidefinite(a: &QMatrix, tol: f64) -> bool {
    if !is_hermitian(a, tol) {
        return false;
    }
    let chi = a.complex_adjoint();
    let sym = CMatrix::from_fn(chi.rows(), chi.cols(), |i, j| (chi[(i, j)] + chi[(j, i)].conj()) * 0.5);
    match clinalg::hermitian_eigenvalues(&sym, &Tolerances::default()) {
        Ok(ev) => ev.first().is_none_or(|&m| m >= -tol * (1.0 + a.frobenius_norm())),
        Err(_) => false,
    }
}

/// `rank(chi(A)) = 2n` at relative singular-value tolerance `tol`.
pub fn is_invertible(a: &QMatrix, tol: f64) -> bool {
    a.is_square() && a.complex_adjoint().rank(tol).is_ok_and(|r| r == 2 * a.rows())
}

/// Off-diagonal entries at most `tol (1 + ||A||_F)` in modulus.
pub fn is_diagonal(a: &QMatrix, tol: f64) -> bool {
    let bound = tol * (1.0 + a.frobenius_norm());
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || a[(i, j)].norm() <= bound))
}

/// `||AB - BA||_F`.
pub fn commutator_norm(a: &QMatrix, b: &QMatrix) -> f64 {
    (&(a * b) - &(b * a)).frobenius_norm()
}

/// `||AB - BA||_F <= tol (1 + ||A||_F ||B||_F)`.
pub fn commutes(a: &QMatrix, b: &QMatrix, tol: f64) -> bool {
    commutator_norm(a, b) <= tol * (1.0 + a.frobenius_norm() * b.frobenius_norm())
}
