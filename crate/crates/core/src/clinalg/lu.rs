use num_complex::Complex64;

use super::{CMatrix, C0, C1};
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// Partial-pivot LU factorization `P A = L U`, packed in one matrix.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: CMatrix,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    pub fn new(a: &CMatrix, tol: &Tolerances) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
        }
        if !a.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = a.rows();
        let threshold = tol.singular * a.frobenius_norm();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm()))
                .unwrap_or(k);
            let pivot = lu[(p, k)];
            if pivot.norm() <= threshold || pivot == C0 {
                return Err(Error::Singular);
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                for j in k + 1..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= f * u;
                }
            }
        }
        Ok(Self { lu, perm, sign })
    }

    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.lu.rows();
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.lu[(i, j)];
                x[i] = x[i] - l * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.lu[(i, j)];
                x[i] = x[i] - u * x[j];
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    pub fn determinant(&self) -> Complex64 {
        let n = self.lu.rows();
        (0..n).fold(Complex64::new(self.sign, 0.0), |acc, i| acc * self.lu[(i, i)])
    }

    pub fn inverse(&self) -> CMatrix {
        let n = self.lu.rows();
        let mut inv = CMatrix::zeros(n, n);
        let mut e = vec![C0; n];
        for j in 0..n {
            e.iter_mut().for_each(|z| *z = C0);
            e[j] = C1;
            inv.set_column(j, &self.solve(&e));
        }
        inv
    }
}

pub fn inverse(a: &CMatrix, tol: &Tolerances) -> Result<CMatrix> {
    Ok(Lu::new(a, tol)?.inverse())
}

/// Determinant; zero for numerically singular input.
pub fn determinant(a: &CMatrix, tol: &Tolerances) -> Result<Complex64> {
    match Lu::new(a, tol) {
        Ok(lu) => Ok(lu.determinant()),
        Err(Error::Singular) => Ok(C0),
        Err(e) => Err(e),
    }
}
