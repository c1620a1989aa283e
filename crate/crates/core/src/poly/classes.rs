//! Coefficient classes whose companion matrix is known to be diagonalizable,
//! and the condition-weighted inequality for companion matrices.
//!
//! Linear polynomials with unitary, diagonal, or positive semidefinite
//! coefficients, and monic quadratics `I l^2 + U1 l + U0` with commuting
//! unitary `U0`, `U1`, have diagonalizable companions.

use serde::{Deserialize, Serialize};

use super::QMatrixPolynomial;
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::hw::{hw_compare, hw_type_check_with, InequalityReport};
use crate::qmat::{
    commutator_norm, commutes, condition_number, diagonalize, is_diagonal, is_positive_semidefinite, is_unitary,
    standard_eigenvalues, QMatrix, StandardSpectrum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearClass {
    Unitary,
    Diagonal,
    Psd,
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompanionDiagonalization {
    /// Class that guarantees diagonalizability; `None` when no class applies.
    pub class: LinearClass,
    pub diagonalizable: bool,
    pub x: Option<QMatrix>,
    pub kappa: Option<f64>,
    pub spectrum: Option<StandardSpectrum>,
    /// Diagnostic from the failed diagonalization, if any.
    pub failure: Option<String>,
    /// Human-readable reason, e.g. "linear, unitary coefficients".
    pub justification: String,
}

fn classify_linear(p: &QMatrixPolynomial, tol: &Tolerances) -> LinearClass {
    let c = p.coefficients();
    let t = tol.structure;
    if c.iter().all(|a| is_unitary(a, t)) {
        LinearClass::Unitary
    } else if c.iter().all(|a| is_diagonal(a, t)) {
        LinearClass::Diagonal
    } else if c.iter().all(|a| is_positive_semidefinite(a, t)) {
        LinearClass::Psd
    } else {
        LinearClass::None
    }
}

/// Diagonal quaternion matrix: `X = diag(r_k)` with `r_k^-1 d_k r_k` the
/// standard representative of `d_k`, so `X` is unitary.
fn diagonal_witness(c: &QMatrix) -> QMatrix {
    let n = c.rows();
    QMatrix::diag(&(0..n).map(|k| c[(k, k)].similarity_witness()).collect::<Vec<_>>())
}

pub fn diagonalizable_companion_linear(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<CompanionDiagonalization> {
    if p.degree() != 1 {
        return Err(Error::NotLinear(p.degree()));
    }
    let class = classify_linear(p, tol);
    let c = p.companion(tol)?.matrix;
    let justification = match class {
        LinearClass::Unitary => "linear, unitary coefficients",
        LinearClass::Diagonal => "linear, diagonal coefficients",
        LinearClass::Psd => "linear, positive semidefinite coefficients",
        LinearClass::None => "linear, diagonalized numerically",
    }
    .to_string();
    if class == LinearClass::Diagonal {
        let x = diagonal_witness(&c);
        let kappa = condition_number(&x, tol)?;
        let spectrum = standard_eigenvalues(&c, tol)?;
        return Ok(CompanionDiagonalization {
            class,
            diagonalizable: true,
            x: Some(x),
            kappa: Some(kappa),
            spectrum: Some(spectrum),
            failure: None,
            justification,
        });
    }
    match diagonalize(&c, tol) {
        Ok(d) => {
            let kappa = d.condition_number(tol)?;
            Ok(CompanionDiagonalization {
                class,
                diagonalizable: true,
                x: Some(d.x),
                kappa: Some(kappa),
                spectrum: Some(d.spectrum),
                failure: None,
                justification,
            })
        }
        Err(e @ Error::NotDiagonalizable(_)) if class == LinearClass::None => Ok(CompanionDiagonalization {
            class,
            diagonalizable: false,
            x: None,
            kappa: None,
            spectrum: None,
            failure: Some(e.to_string()),
            justification,
        }),
        Err(e) => Err(e),
    }
}

/// Checks the hypotheses `P = I l^2 + U1 l + U0` with commuting unitary
/// `U0`, `U1`, then diagonalizes the companion. The reported `kappa` is
/// measured; no bound on it is asserted.
pub fn diagonalizable_companion_quadratic_unitary(
    p: &QMatrixPolynomial,
    tol: &Tolerances,
) -> Result<CompanionDiagonalization> {
    check_quadratic_unitary(p, tol)?;
    let c = p.companion(tol)?.matrix;
    let d = diagonalize(&c, tol)?;
    let kappa = d.condition_number(tol)?;
    Ok(CompanionDiagonalization {
        class: LinearClass::None,
        diagonalizable: true,
        x: Some(d.x),
        kappa: Some(kappa),
        spectrum: Some(d.spectrum),
        failure: None,
        justification: "monic quadratic, commuting unitary coefficients".into(),
    })
}

fn check_quadratic_unitary(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<()> {
    let t = tol.structure;
    if p.degree() != 2 {
        return Err(Error::PreconditionViolated(format!("degree is {}, expected 2", p.degree())));
    }
    if !p.is_monic(t) {
        return Err(Error::PreconditionViolated("A2 is not the identity: polynomial is not monic".into()));
    }
    let (u0, u1) = (&p.coefficients()[0], &p.coefficients()[1]);
    for (name, u) in [("U0", u0), ("U1", u1)] {
        if !is_unitary(u, t) {
            return Err(Error::PreconditionViolated(format!("{name} is not unitary")));
        }
    }
    if !commutes(u0, u1, t) {
        return Err(Error::PreconditionViolated(format!(
            "U0 and U1 do not commute (commutator norm {:.3e})",
            commutator_norm(u0, u1)
        )));
    }
    Ok(())
}

fn check_pair(p: &QMatrixPolynomial, q: &QMatrixPolynomial) -> Result<()> {
    if p.size() != q.size() || p.degree() != q.degree() {
        return Err(Error::ShapeMismatch(format!(
            "size {} degree {} vs size {} degree {}",
            p.size(),
            p.degree(),
            q.size(),
            q.degree()
        )));
    }
    Ok(())
}

/// Frobenius bound on the companions, with no hypothesis checked.
pub fn hw_compare_poly(p: &QMatrixPolynomial, q: &QMatrixPolynomial, tol: &Tolerances) -> Result<InequalityReport> {
    check_pair(p, q)?;
    hw_compare(&p.companion(tol)?.matrix, &q.companion(tol)?.matrix, tol)
}

/// Condition-weighted inequality for the companions of `P` and `Q`. The
/// diagonalizer of `C_P` comes from the first applicable class, falling back
/// to numerical diagonalization.
pub fn hw_type_poly(p: &QMatrixPolynomial, q: &QMatrixPolynomial, tol: &Tolerances) -> Result<InequalityReport> {
    check_pair(p, q)?;
    let cp = p.companion(tol)?.matrix;
    let cq = q.companion(tol)?.matrix;
    let d = if p.degree() == 1 {
        diagonalizable_companion_linear(p, tol)?
    } else if p.degree() == 2 && check_quadratic_unitary(p, tol).is_ok() {
        diagonalizable_companion_quadratic_unitary(p, tol)?
    } else {
        let d = diagonalize(&cp, tol)?;
        let kappa = d.condition_number(tol)?;
        CompanionDiagonalization {
            class: LinearClass::None,
            diagonalizable: true,
            x: Some(d.x),
            kappa: Some(kappa),
            spectrum: Some(d.spectrum),
            failure: None,
            justification: "diagonalized numerically".into(),
        }
    };
    let x = match d.x {
        Some(x) => x,
        None => return Err(Error::NotDiagonalizable(d.failure.unwrap_or_default())),
    };
    hw_type_check_with(&cp, &cq, &x, &d.justification, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    #[test]
    fn unitary_linear_has_kappa_one() {
        let tol = Tolerances::default();
        let s = 0.5f64.sqrt();
        let u = QMatrix::from_vec(
            2,
            2,
            vec![Quaternion::new(s, 0.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, s, 0.0), Quaternion::new(0.0, 0.0, s, 0.0), Quaternion::new(s, 0.0, 0.0, 0.0)],
        )
        .unwrap();
        assert!(is_unitary(&u, 1e-12));
        let p = QMatrixPolynomial::new(vec![u.clone(), u]).unwrap();
        let d = diagonalizable_companion_linear(&p, &tol).unwrap();
        assert_eq!(d.class, LinearClass::Unitary);
        assert!((d.kappa.unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn diagonal_linear() {
        let tol = Tolerances::default();
        let a0 = QMatrix::diag(&[Quaternion::new(1.0, 0.0, 3.0, 0.0), Quaternion::real(2.0)]);
        let a1 = QMatrix::diag(&[Quaternion::real(2.0), Quaternion::real(4.0)]);
        let p = QMatrixPolynomial::new(vec![a0, a1]).unwrap();
        let d = diagonalizable_companion_linear(&p, &tol).unwrap();
        assert_eq!(d.class, LinearClass::Diagonal);
        assert_eq!(d.kappa, Some(1.0));
        let real = QMatrixPolynomial::new(vec![QMatrix::identity(2).scale(3.0), QMatrix::identity(2)]).unwrap();
        let d = diagonalizable_companion_linear(&real, &tol).unwrap();
        assert_eq!(d.x, Some(QMatrix::identity(2)));
    }

    #[test]
    fn normal_coefficients_can_be_defective() {
        let tol = Tolerances::default();
        let a1 = QMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let a0 = QMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 1.0]);
        let p = QMatrixPolynomial::new(vec![a0, a1]).unwrap();
        let d = diagonalizable_companion_linear(&p, &tol).unwrap();
        assert_eq!(d.class, LinearClass::None);
        assert!(!d.diagonalizable);
    }

    #[test]
    fn identity_quadratic() {
        let tol = Tolerances::default();
        let p = QMatrixPolynomial::new(vec![QMatrix::identity(2); 3]).unwrap();
        let d = diagonalizable_companion_quadratic_unitary(&p, &tol).unwrap();
        let s = d.spectrum.unwrap().values;
        let root = num_complex::Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        assert!(s.iter().all(|z| (z - root).norm() < 1e-8));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn not_linear() {
        let tol = Tolerances::default();
        let p = QMatrixPolynomial::new(vec![QMatrix::identity(1); 3]).unwrap();
        assert_eq!(diagonalizable_companion_linear(&p, &tol).unwrap_err(), Error::NotLinear(2));
    }
}
