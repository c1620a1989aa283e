use std::cmp::Ordering;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::QMatrix;
use crate::clinalg;
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// The `n` standard eigenvalues of an `n x n` quaternion matrix: one
/// representative in the closed upper half plane per conjugate pair of
/// eigenvalues of the complex adjoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StandardSpectrum {
    /// Sorted by real part, then imaginary part.
    pub values: Vec<Complex64>,
    /// Largest `|l - conj(l')|` over the matched pairs.
    pub pairing_residual: f64,
}

impl StandardSpectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The values followed by their conjugates: the spectrum of the adjoint.
    pub fn unfold(&self) -> Vec<Complex64> {
        self.values.iter().copied().chain(self.values.iter().map(|z| z.conj())).collect()
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.norm()).collect()
    }
}

pub(crate) fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Folds a conjugation-closed multiset into representatives in `C+`.
///
/// Pairs are chosen greedily by increasing `|l_i - conj(l_j)|`; each pair
/// contributes `(l_i + conj(l_j)) / 2`, reflected into the upper half plane.
/// Imaginary parts of modulus at most `real_clamp` are clamped to zero.
pub fn fold_conjugate_pairs(
    eigenvalues: &[Complex64],
    threshold: f64,
    real_clamp: f64,
) -> Result<StandardSpectrum> {
    let m = eigenvalues.len();
    if !m.is_multiple_of(2) {
        return Err(Error::MalformedPairing(format!("odd number of eigenvalues ({m})")));
    }
    let mut candidates = Vec::with_capacity(m * (m.saturating_sub(1)) / 2);
    for i in 0..m {
        for j in i + 1..m {
            candidates.push(((eigenvalues[i] - eigenvalues[j].conj()).norm(), i, j));
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used = vec![false; m];
    let mut values = Vec::with_capacity(m / 2);
    let mut residual: f64 = 0.0;
    for (d, i, j) in candidates {
        if used[i] || used[j] {
            continue;
        }
        used[i] = true;
        used[j] = true;
        residual = residual.max(d);
        let mut rep = (eigenvalues[i] + eigenvalues[j].conj()) * 0.5;
        if rep.im < -real_clamp {
            rep = rep.conj();
        }
        if rep.im.abs() <= real_clamp {
            rep.im = 0.0;
        }
        values.push(rep);
        if values.len() == m / 2 {
            break;
        }
    }
    if residual > threshold {
        return Err(Error::PairingFailure { residual, threshold });
    }
    values.sort_by(cmp_complex);
    Ok(StandardSpectrum { values, pairing_residual: residual })
}

/// Standard eigenvalues of a square quaternion matrix, computed from the
/// eigenvalues of its complex adjoint.
pub fn standard_eigenvalues(a: &QMatrix, tol: &Tolerances) -> Result<StandardSpectrum> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let chi = a.complex_adjoint();
    let ev = clinalg::eigenvalues(&chi, tol)?.eigenvalues;
    fold_conjugate_pairs(&ev, tol.pairing * a.frobenius_norm(), tol.real_clamp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_values(s: &StandardSpectrum, want: &[Complex64], tol: f64) {
        assert_eq!(s.values.len(), want.len());
        for (a, b) in s.values.iter().zip(want) {
            assert!((a - b).norm() <= tol, "{:?} vs {:?}", s.values, want);
        }
    }

    #[test]
    fn complex_diagonal_folds_to_upper_half_plane() {
        let tol = Tolerances::default();
        let a = QMatrix::diag(&[Quaternion::new(1.0, 1.0, 0.0, 0.0), Quaternion::new(1.0, -1.0, 0.0, 0.0)]);
        let s = standard_eigenvalues(&a, &tol).unwrap();
        assert_values(&s, &[c(1.0, 1.0), c(1.0, 1.0)], 1e-10);
    }

    #[test]
    fn symplectic_form() {
        let tol = Tolerances::default();
        let a = QMatrix::diag(&[Quaternion::J, Quaternion::J]);
        let s = standard_eigenvalues(&a, &tol).unwrap();
        assert_values(&s, &[c(0.0, 1.0), c(0.0, 1.0)], 1e-10);
    }

    #[test]
    fn identity() {
        let tol = Tolerances::default();
        let s = standard_eigenvalues(&QMatrix::identity(4), &tol).unwrap();
        assert_values(&s, &[c(1.0, 0.0); 4], 1e-12);
    }

    #[test]
    fn tiny_negative_imaginary_parts_clamp_to_real_axis() {
        let ev = [c(2.0, -1e-12), c(2.0, -3e-12)];
        let s = fold_conjugate_pairs(&ev, 1e-6, 1e-10).unwrap();
        assert_eq!(s.values, vec![c(2.0, 0.0)]);
    }

    #[test]
    fn pairing_failure_is_reported() {
        let ev = [c(1.0, 1.0), c(2.0, 1.0)];
        assert!(matches!(fold_conjugate_pairs(&ev, 1e-6, 1e-10), Err(Error::PairingFailure { .. })));
        assert!(matches!(fold_conjugate_pairs(&ev[..1], 1e-6, 1e-10), Err(Error::MalformedPairing(_))));
    }

    #[test]
    fn unfold_restores_conjugates() {
        let s = StandardSpectrum { values: vec![c(1.0, 2.0)], pairing_residual: 0.0 };
        assert_eq!(s.unfold(), vec![c(1.0, 2.0), c(1.0, -2.0)]);
    }
}
