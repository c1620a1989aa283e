//! Diagonalization of quaternion matrices through the adjoint eigenbasis.
//!
//! If `chi(A) v = v l` with `v = [v1; v2]`, then `x = v1 - conj(v2) j`
//! satisfies `A x = x l`. Eigenvalues of `chi(A)` are grouped into clusters;
//! each cluster's eigenspace is read off the trailing right singular vectors
//! of `chi(A) - mu I`. Clusters on the real axis contain both members of every
//! conjugate pair, so only half of their eigenspace is used: vectors are
//! picked together with their partners `J v = [-conj(v2); conj(v1)]`.

use num_complex::Complex64;

use super::spectrum::{cmp_complex, StandardSpectrum};
use super::{complex_diag, QMatrix};
use crate::clinalg::{self, dot, vec_norm};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::quat::Quaternion;

#[derive(Debug, Clone)]
pub struct Diagonalization {
    /// Nonsingular, with `X^-1 A X = diag(spectrum.values)`.
    pub x: QMatrix,
    pub spectrum: StandardSpectrum,
    /// `||X^-1 A X - D||_F`.
    pub residual: f64,
}

impl Diagonalization {
    pub fn d(&self) -> QMatrix {
        complex_diag(&self.spectrum.values)
    }

    pub fn condition_number(&self, tol: &Tolerances) -> Result<f64> {
        condition_number(&self.x, tol)
    }
}

struct Cluster {
    members: Vec<Complex64>,
    mean: Complex64,
    spread: f64,
}

/// Single-linkage clustering at distance `radius`.
fn clusters(values: &[Complex64], radius: f64) -> Vec<Cluster> {
    let n = values.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= radius {
                let (ri, rj) = (find(&mut label, i), find(&mut label, j));
                if ri != rj {
                    label[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for (i, &v) in values.iter().enumerate().take(n) {
        let r = find(&mut label, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(v),
            None => groups.push((r, vec![v])),
        }
    }
    groups
        .into_iter()
        .map(|(_, members)| {
            let mean = members.iter().sum::<Complex64>() / members.len() as f64;
            let spread = members.iter().map(|z| (z - mean).norm()).fold(0.0, f64::max);
            Cluster { members, mean, spread }
        })
        .collect()
}

fn partner(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len() / 2;
    (0..n).map(|i| -v[n + i].conj()).chain((0..n).map(|i| v[i].conj())).collect()
}

fn project_out(p: &mut [Complex64], u: &[Complex64]) {
    let c = dot(u, p);
    for (x, y) in p.iter_mut().zip(u) {
        *x -= y * c;
    }
}

fn normalized(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let n = vec_norm(&v);
    for z in v.iter_mut() {
        *z /= n;
    }
    v
}

/// Chooses `count` vectors from an eigenspace closed under `J` such that the
/// chosen vectors together with their partners stay orthonormal.
fn symplectic_selection(mut pool: Vec<Vec<Complex64>>, count: usize) -> Vec<Vec<Complex64>> {
    let mut chosen = Vec::with_capacity(count);
    for _ in 0..count {
        let (best, _) = pool
            .iter()
            .enumerate()
            .map(|(k, p)| (k, vec_norm(p)))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("pool is never exhausted before count");
        let w = normalized(pool.swap_remove(best));
        let mut jw = partner(&w);
        project_out(&mut jw, &w);
        let jw = normalized(jw);
        for p in pool.iter_mut() {
            project_out(p, &w);
            project_out(p, &jw);
        }
        chosen.push(w);
    }
    chosen
}

fn quaternion_column(v: &[Complex64]) -> Vec<Quaternion> {
    let n = v.len() / 2;
    (0..n).map(|i| Quaternion::from_parts(v[i], -v[n + i].conj())).collect()
}

/// Diagonalizes a square quaternion matrix, or reports the first eigenvalue
/// whose geometric multiplicity falls short of its algebraic multiplicity.
pub fn diagonalize(a: &QMatrix, tol: &Tolerances) -> Result<Diagonalization> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let n = a.rows();
    let chi = a.complex_adjoint();
    let scale = chi.frobenius_norm().max(f64::MIN_POSITIVE);
    let ev = clinalg::eigenvalues(&chi, tol)?.eigenvalues;

    let mut columns: Vec<(Complex64, Vec<Complex64>)> = Vec::with_capacity(n);
    let mut pairing_residual: f64 = 0.0;
    for cl in clusters(&ev, tol.cluster * scale) {
        let size = cl.members.len();
        let self_conjugate = cl.mean.im.abs() <= cl.spread.max(tol.cluster * scale);
        if !self_conjugate && cl.mean.im < 0.0 {
            continue;
        }
        let svd = clinalg::svd(&chi.shifted(cl.mean))?;
        let threshold = (tol.null_space * scale).max(10.0 * cl.spread);
        let geometric = svd.singular_values.iter().rev().take_while(|&&s| s <= threshold).count();
        if geometric < size {
            return Err(Error::NotDiagonalizable(format!(
                "eigenvalue {:.6}{:+.6}i has algebraic multiplicity {} in the adjoint but geometric multiplicity {}",
                cl.mean.re, cl.mean.im, size, geometric
            )));
        }
        let basis = svd.trailing_vectors(size);
        if self_conjugate {
            if size % 2 != 0 {
                return Err(Error::PairingFailure { residual: cl.spread, threshold: tol.cluster * scale });
            }
            let value = Complex64::new(cl.mean.re, 0.0);
            pairing_residual = pairing_residual.max(2.0 * cl.mean.im.abs() + cl.spread);
            for v in symplectic_selection(basis, size / 2) {
                columns.push((value, v));
            }
        } else {
            for v in basis {
                columns.push((cl.mean, v));
            }
        }
    }
    if columns.len() != n {
        return Err(Error::PairingFailure { residual: f64::INFINITY, threshold: tol.pairing * scale });
    }
    columns.sort_by(|p, q| cmp_complex(&p.0, &q.0));

    let mut x = QMatrix::zeros(n, n);
    for (k, (_, v)) in columns.iter().enumerate() {
        for (i, q) in quaternion_column(v).into_iter().enumerate() {
            x[(i, k)] = q;
        }
    }
    let values: Vec<Complex64> = columns.iter().map(|c| c.0).collect();
    let xinv = x
        .inverse(tol)
        .map_err(|_| Error::NotDiagonalizable("eigenvector matrix is singular".into()))?;
    let d = complex_diag(&values);
    let residual = (&(&(&xinv * a) * &x) - &d).frobenius_norm();
    if residual > tol.diag_verify * a.frobenius_norm().max(f64::MIN_POSITIVE) {
        return Err(Error::NotDiagonalizable(format!(
            "reconstructed eigenbasis leaves residual {residual:.3e}"
        )));
    }
    Ok(Diagonalization { x, spectrum: StandardSpectrum { values, pairing_residual }, residual })
}

/// Spectral condition number `||X||_2 ||X^-1||_2`.
pub fn condition_number(x: &QMatrix, tol: &Tolerances) -> Result<f64> {
    let inv = x.inverse(tol)?;
    Ok(x.spectral_norm()? * inv.spectral_norm()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{is_unitary, standard_eigenvalues};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn check_roundtrip(a: &QMatrix, d: &Diagonalization) {
        let tol = Tolerances::default();
        let xinv = d.x.inverse(&tol).unwrap();
        let back = &(&d.x * &d.d()) * &xinv;
        assert!((&back - a).frobenius_norm() <= 1e-6 * a.frobenius_norm().max(1.0));
    }

    #[test]
    fn j_and_k() {
        let tol = Tolerances::default();
        let a = QMatrix::diag(&[Quaternion::J, Quaternion::K]);
        let d = diagonalize(&a, &tol).unwrap();
        for v in &d.spectrum.values {
            assert!((v - c(0.0, 1.0)).norm() < 1e-10);
        }
        check_roundtrip(&a, &d);
    }

    #[test]
    fn jordan_block_is_defective() {
        let tol = Tolerances::default();
        let a = QMatrix::from_real(2, 2, &[2.0, 1.0, 0.0, 2.0]);
        assert!(matches!(diagonalize(&a, &tol), Err(Error::NotDiagonalizable(_))));
    }

    #[test]
    fn quaternion_jordan_block_is_defective() {
        let tol = Tolerances::default();
        let q = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        let a = QMatrix::from_vec(2, 2, vec![q, Quaternion::ONE, Quaternion::ZERO, q]).unwrap();
        assert!(matches!(diagonalize(&a, &tol), Err(Error::NotDiagonalizable(_))));
    }

    #[test]
    fn hermitian_gives_unitary_eigenbasis() {
        let tol = Tolerances::default();
        let a = QMatrix::from_vec(
            3,
            3,
            vec![
                Quaternion::real(2.0),
                Quaternion::new(1.0, 0.5, -1.0, 0.0),
                Quaternion::new(0.0, 0.0, 0.3, 1.0),
                Quaternion::new(1.0, -0.5, 1.0, 0.0),
                Quaternion::real(-1.0),
                Quaternion::new(0.2, 0.0, 0.0, -0.7),
                Quaternion::new(0.0, 0.0, -0.3, -1.0),
                Quaternion::new(0.2, 0.0, 0.0, 0.7),
                Quaternion::real(0.5),
            ],
        )
        .unwrap();
        let d = diagonalize(&a, &tol).unwrap();
        assert!(is_unitary(&d.x, 1e-8));
        assert!((d.condition_number(&tol).unwrap() - 1.0).abs() < 1e-8);
        let s = standard_eigenvalues(&a, &tol).unwrap();
        for (p, q) in s.values.iter().zip(&d.spectrum.values) {
            assert!((p - q).norm() < 1e-8);
            assert!(p.im.abs() < 1e-8);
        }
        check_roundtrip(&a, &d);
    }

    #[test]
    fn repeated_real_eigenvalue() {
        let tol = Tolerances::default();
        let a = QMatrix::identity(3).scale(2.0);
        let d = diagonalize(&a, &tol).unwrap();
        assert!(is_unitary(&d.x, 1e-10));
        check_roundtrip(&a, &d);
    }

    #[test]
    fn condition_number_examples() {
        let tol = Tolerances::default();
        let x = QMatrix::from_real(2, 2, &[2.0, 0.0, 0.0, 1.0]);
        assert!((condition_number(&x, &tol).unwrap() - 2.0).abs() < 1e-12);
        let u = QMatrix::diag(&[Quaternion::J, Quaternion::new(1.0, 1.0, 0.0, 0.0).scale(0.5f64.sqrt())]);
        assert!((condition_number(&u, &tol).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(condition_number(&QMatrix::zeros(2, 2), &tol).unwrap_err(), Error::Singular);
    }
}
