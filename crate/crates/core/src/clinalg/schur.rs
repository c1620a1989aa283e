//! Complex Schur decomposition: Householder reduction to upper Hessenberg
//! form followed by single-shift QR with Wilkinson shifts.

use num_complex::Complex64;

use super::{vec_norm, CMatrix, C0};
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// `A = Q T Q*` with `T` upper triangular and `Q` unitary.
#[derive(Debug, Clone)]
pub struct Schur {
    pub t: CMatrix,
    pub q: CMatrix,
    /// Total QR sweeps spent.
    pub sweeps: usize,
}

/// Eigenvalues, optionally with right eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<Complex64>,
    /// Columns are unit right eigenvectors aligned with `eigenvalues`.
    pub eigenvectors: Option<CMatrix>,
    /// `max_i ||A v_i - v_i l_i|| / ||A||_F`, when vectors were computed.
    pub residual: Option<f64>,
}

fn check_input(a: &CMatrix) -> Result<()> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::ShapeMismatch(format!(
            "eigenproblem needs a nonempty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Reduces `h` in place to upper Hessenberg form, accumulating into `q`.
fn hessenberg(h: &mut CMatrix, q: &mut CMatrix) {
    let n = h.rows();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let xnorm = vec_norm(&x);
        if xnorm == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x[0] / x[0].norm() };
        let alpha = -phase * xnorm;
        let mut v = x;
        v[0] -= alpha;
        let vnorm = vec_norm(&v);
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // H <- P H with P = I - 2 v v*
        for j in 0..n {
            let s: Complex64 = (0..v.len()).map(|r| v[r].conj() * h[(k + 1 + r, j)]).sum();
            for r in 0..v.len() {
                h[(k + 1 + r, j)] -= v[r] * s * 2.0;
            }
        }
        // H <- H P, Q <- Q P
        for m in [&mut *h, &mut *q] {
            for i in 0..n {
                let s: Complex64 = (0..v.len()).map(|r| m[(i, k + 1 + r)] * v[r]).sum();
                for r in 0..v.len() {
                    m[(i, k + 1 + r)] -= s * v[r].conj() * 2.0;
                }
            }
        }
        for i in k + 2..n {
            h[(i, k)] = C0;
        }
    }
}

/// Rotation `[[c, s], [-conj(s), c]]` mapping `(x, y)` to `(r, 0)`.
fn givens(x: Complex64, y: Complex64) -> (f64, Complex64) {
    let ax = x.norm();
    let r = ax.hypot(y.norm());
    if r == 0.0 {
        return (1.0, C0);
    }
    if ax == 0.0 {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    (ax / r, (x / ax) * y.conj() / r)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let (m1, m2) = (mean + disc, mean - disc);
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Complex Schur form of a square matrix.
pub fn schur(a: &CMatrix, tol: &Tolerances) -> Result<Schur> {
    check_input(a)?;
    let n = a.rows();
    let mut h = a.clone();
    let mut q = CMatrix::identity(n);
    hessenberg(&mut h, &mut q);

    let norm = h.frobenius_norm();
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    let max_sweeps = 100 * n;
    let mut sweeps = 0;
    let mut since_deflation = 0;
    let mut hi = n - 1;
    while hi > 0 {
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut scale = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if scale == 0.0 {
                scale = norm;
            }
            if sub <= tol.deflation * scale || sub <= f64::EPSILON * norm || sub <= tiny {
                h[(lo, lo - 1)] = C0;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        sweeps += 1;
        since_deflation += 1;
        if sweeps > max_sweeps {
            return Err(Error::NoConvergence { sweeps: max_sweeps });
        }
        let shift = if since_deflation % 10 == 0 {
            let s = h[(hi, hi - 1)].norm();
            h[(hi, hi)] + Complex64::new(0.75 * s, 0.4375 * s)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        let mut x = h[(lo, lo)] - shift;
        let mut y = h[(lo + 1, lo)];
        for k in lo..hi {
            let (c, s) = givens(x, y);
            let start = if k > lo { k - 1 } else { lo };
            for j in start..n {
                let (p, r) = (h[(k, j)], h[(k + 1, j)]);
                h[(k, j)] = p * c + s * r;
                h[(k + 1, j)] = -s.conj() * p + r * c;
            }
            let stop = (k + 2).min(hi);
            for i in 0..=stop {
                let (p, r) = (h[(i, k)], h[(i, k + 1)]);
                h[(i, k)] = p * c + s.conj() * r;
                h[(i, k + 1)] = -s * p + r * c;
            }
            for i in 0..n {
                let (p, r) = (q[(i, k)], q[(i, k + 1)]);
                q[(i, k)] = p * c + s.conj() * r;
                q[(i, k + 1)] = -s * p + r * c;
            }
            if k > lo {
                h[(k + 1, k - 1)] = C0;
            }
            if k + 1 < hi {
                x = h[(k + 1, k)];
                y = h[(k + 2, k)];
            }
        }
    }
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = C0;
        }
    }
    Ok(Schur { t: h, q, sweeps })
}

/// Eigenvalues (with multiplicity) of a square complex matrix.
pub fn eigenvalues(a: &CMatrix, tol: &Tolerances) -> Result<EigenDecomposition> {
    let s = schur(a, tol)?;
    let eigenvalues = (0..a.rows()).map(|i| s.t[(i, i)]).collect();
    Ok(EigenDecomposition { eigenvalues, eigenvectors: None, residual: None })
}

/// Eigenvalues and unit right eigenvectors. Vectors come from one exact-shift
/// inverse-iteration step on the triangular Schur factor, so a defective
/// eigenvalue yields (numerically) repeated vectors.
pub fn eigen_full(a: &CMatrix, tol: &Tolerances) -> Result<EigenDecomposition> {
    let s = schur(a, tol)?;
    let n = a.rows();
    let t = &s.t;
    let anorm = a.frobenius_norm();
    let smin = (f64::EPSILON * t.frobenius_norm()).max(f64::MIN_POSITIVE);
    let mut vectors = CMatrix::zeros(n, n);
    let mut eigenvalues = Vec::with_capacity(n);
    let mut residual: f64 = 0.0;
    for k in 0..n {
        let lambda = t[(k, k)];
        eigenvalues.push(lambda);
        let mut y = vec![C0; n];
        y[k] = Complex64::new(1.0, 0.0);
        for j in (0..k).rev() {
            let acc: Complex64 = (j + 1..=k).map(|l| t[(j, l)] * y[l]).sum();
            let mut d = t[(j, j)] - lambda;
            if d.norm() < smin {
                d = Complex64::new(smin, 0.0);
            }
            y[j] = -acc / d;
            let big = y[j].norm();
            if big > 1e150 {
                for z in y.iter_mut() {
                    *z /= big;
                }
            }
        }
        let mut v = s.q.mul_vec(&y);
        let vn = vec_norm(&v);
        for z in v.iter_mut() {
            *z /= vn;
        }
        let av = a.mul_vec(&v);
        let r: f64 = av.iter().zip(&v).map(|(p, q)| (p - q * lambda).norm_sqr()).sum::<f64>().sqrt();
        if anorm > 0.0 {
            residual = residual.max(r / anorm);
        }
        vectors.set_column(k, &v);
    }
    if residual > tol.eig_residual {
        return Err(Error::NoConvergence { sweeps: s.sweeps });
    }
    Ok(EigenDecomposition { eigenvalues, eigenvectors: Some(vectors), residual: Some(residual) })
}
