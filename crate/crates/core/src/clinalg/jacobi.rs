//! Jacobi methods: two-sided cyclic Jacobi for Hermitian eigenproblems and
//! one-sided (Hestenes) Jacobi for the singular value decomposition.

use num_complex::Complex64;

use super::{dot, CMatrix, C0};
use crate::config::Tolerances;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Nondecreasing.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: CMatrix,
}

pub fn hermitian_eigenvalues(a: &CMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(a, tol)?.values)
}

pub fn hermitian_eigen(a: &CMatrix, tol: &Tolerances) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = a.rows();
    let norm = a.frobenius_norm();
    let asym = (a - &a.adjoint()).frobenius_norm();
    if asym > tol.hermitian * (1.0 + norm) {
        return Err(Error::NotHermitian { residual: asym });
    }
    // symmetrize so the rotations act on an exactly Hermitian matrix
    let mut m = CMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = CMatrix::identity(n);
    let target = tol.jacobi * norm;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let g = m[(p, q)];
                let gabs = g.norm();
                if gabs == 0.0 {
                    continue;
                }
                let phase = g / gabs;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let theta = (aqq - app) / (2.0 * gabs);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // W = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q)
                let w_pp = Complex64::new(c, 0.0);
                let w_pq = Complex64::new(s, 0.0);
                let w_qp = -phase.conj() * s;
                let w_qq = phase.conj() * c;
                // M <- M W
                for i in 0..n {
                    let (x, y) = (m[(i, p)], m[(i, q)]);
                    m[(i, p)] = x * w_pp + y * w_qp;
                    m[(i, q)] = x * w_pq + y * w_qq;
                }
                // M <- W* M
                for j in 0..n {
                    let (x, y) = (m[(p, j)], m[(q, j)]);
                    m[(p, j)] = w_pp.conj() * x + w_qp.conj() * y;
                    m[(q, j)] = w_pq.conj() * x + w_qq.conj() * y;
                }
                m[(p, q)] = C0;
                m[(q, p)] = C0;
                m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
                for i in 0..n {
                    let (x, y) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = x * w_pp + y * w_qp;
                    v[(i, q)] = x * w_pq + y * w_qq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |r, k| v[(r, order[k])]);
    Ok(HermitianEigen { values, vectors })
}

/// Singular values (nonincreasing) and right singular vectors.
#[derive(Debug, Clone)]
pub struct Svd {
    pub singular_values: Vec<f64>,
    /// `cols x cols` unitary; column `k` pairs with `singular_values[k]`.
    pub v: CMatrix,
}

impl Svd {
    /// Right singular vectors for the `k` smallest singular values.
    pub fn trailing_vectors(&self, k: usize) -> Vec<Vec<Complex64>> {
        let n = self.v.cols();
        (n - k..n).map(|j| self.v.column(j)).collect()
    }
}

/// One-sided Jacobi SVD. Small singular values keep high relative accuracy,
/// which the null-space and rank decisions rely on.
pub fn svd(a: &CMatrix) -> Result<Svd> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut e = vec![C0; n];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let eps = f64::EPSILON * (m.max(n) as f64);
    // columns that have collapsed to rounding noise are left alone
    let floor = (f64::EPSILON * a.frobenius_norm()).powi(2);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = dot(&cols[p], &cols[q]);
                let gabs = gamma.norm();
                if gabs == 0.0 || gabs <= eps * (alpha * beta).sqrt() || alpha.min(beta) <= floor {
                    continue;
                }
                rotated = true;
                let phase_conj = (gamma / gabs).conj();
                let zeta = (beta - alpha) / (2.0 * gabs);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for vecs in [&mut cols, &mut v] {
                    let (lo, hi) = vecs.split_at_mut(q);
                    for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                        let yp = *y * phase_conj;
                        let nx = *x * c - yp * s;
                        let ny = *x * s + yp * c;
                        *x = nx;
                        *y = ny;
                    }
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let norms: Vec<f64> = cols.iter().map(|c| super::vec_norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let singular_values = order.iter().map(|&i| norms[i]).collect();
    let vm = CMatrix::from_fn(n, n, |r, k| v[order[k]][r]);
    Ok(Svd { singular_values, v: vm })
}
