//! Dense quaternion matrices and the complex adjoint embedding
//!
//! ```text
//!   A = A1 + A2 j   |->   chi(A) = [  A1       A2     ]
//!                                  [ -conj(A2) conj(A1) ]
//! ```
//!
//! `chi` is an injective ring homomorphism, so everything spectral about a
//! quaternion matrix is computed on its complex adjoint. The identity maps to
//! the `2n x 2n` identity, and every entry contributes its squared modulus
//! twice, so `||chi(A)||_F^2 = 2 ||A||_F^2` (the norms themselves differ by
//! `sqrt 2`, not 2). The spectral norms agree.

mod diag;
mod predicates;
mod spectrum;

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::clinalg::CMatrix;
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::quat::Quaternion;

pub use diag::{condition_number, diagonalize, Diagonalization};
pub use predicates::{commutator_norm, commutes, is_diagonal, is_hermitian, is_invertible, is_normal, is_positive_semidefinite, is_unitary};
pub use spectrum::{fold_conjugate_pairs, standard_eigenvalues, StandardSpectrum};

/// Dense row-major quaternion matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![Quaternion::ONE; n])
    }

    pub fn diag(values: &[Quaternion]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &q) in values.iter().enumerate() {
            m[(i, i)] = q;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Real matrix from row-major data.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Self {
        assert_eq!(data.len(), rows * cols, "real data length");
        Self::from_fn(rows, cols, |i, j| Quaternion::real(data[i * cols + j]))
    }

    /// A complex matrix viewed as a quaternion matrix.
    pub fn from_complex(c: &CMatrix) -> Self {
        Self::from_fn(c.rows(), c.cols(), |i, j| Quaternion::from(c[(i, j)]))
    }

    /// `A1 + A2 j` from the two complex parts.
    pub fn from_parts(a1: &CMatrix, a2: &CMatrix) -> Result<Self> {
        if (a1.rows(), a1.cols()) != (a2.rows(), a2.cols()) {
            return Err(Error::ShapeMismatch("complex parts differ in shape".into()));
        }
        Ok(Self::from_fn(a1.rows(), a1.cols(), |i, j| Quaternion::from_parts(a1[(i, j)], a2[(i, j)])))
    }

    /// The unique split `A = A1 + A2 j`.
    pub fn parts(&self) -> (CMatrix, CMatrix) {
        let a1 = CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].parts().0);
        let a2 = CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].parts().1);
        (a1, a2)
    }

    /// Recovers `A` from a matrix with the block layout of `chi(A)`, reading
    /// only the top block row.
    pub fn from_complex_adjoint(c: &CMatrix) -> Result<Self> {
        if !c.rows().is_multiple_of(2) || !c.cols().is_multiple_of(2) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} cannot be a complex adjoint",
                c.rows(),
                c.cols()
            )));
        }
        let (n, m) = (c.rows() / 2, c.cols() / 2);
        Ok(Self::from_fn(n, m, |i, j| Quaternion::from_parts(c[(i, j)], c[(i, m + j)])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|q| q.is_finite())
    }

    /// Whether every entry has zero `j` and `k` components.
    pub fn is_complex(&self) -> bool {
        self.data.iter().all(|q| q.a2 == 0.0 && q.a3 == 0.0)
    }

    /// The complex adjoint `chi(A)`, a `2n x 2m` complex matrix. Exact.
    pub fn complex_adjoint(&self) -> CMatrix {
        let (n, m) = (self.rows, self.cols);
        let mut c = CMatrix::zeros(2 * n, 2 * m);
        for i in 0..n {
            for j in 0..m {
                let (z1, z2) = self[(i, j)].parts();
                c[(i, j)] = z1;
                c[(i, m + j)] = z2;
                c[(n + i, j)] = -z2.conj();
                c[(n + i, m + j)] = z1.conj();
            }
        }
        c
    }

    /// `A* = (conj(a_ji))`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Computed from the entry moduli; `||chi(A)||_F = sqrt(2) ||A||_F`.
    pub fn frobenius_norm(&self) -> f64 {
        let big = self.data.iter().map(|q| q.norm()).fold(0.0, f64::max);
        if big == 0.0 || !big.is_finite() {
            return big;
        }
        big * self.data.iter().map(|q| (q.norm() / big).powi(2)).sum::<f64>().sqrt()
    }

    /// `||A||_2 = ||chi(A)||_2`.
    pub fn spectral_norm(&self) -> Result<f64> {
        self.complex_adjoint().spectral_norm()
    }

    pub fn trace(&self) -> Quaternion {
        (0..self.rows.min(self.cols)).fold(Quaternion::ZERO, |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|q| q.scale(s)).collect() }
    }

    /// Left scalar multiplication `q A`.
    pub fn left_mul_scalar(&self, q: Quaternion) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| q * a).collect() }
    }

    /// Right scalar multiplication `A q`.
    pub fn right_mul_scalar(&self, q: Quaternion) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| a * q).collect() }
    }

    pub fn try_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Quaternion::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &QMatrix, op: &str, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Result<QMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, rhs: &QMatrix) -> Result<QMatrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &QMatrix) -> Result<QMatrix> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &QMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape");
        self.data.iter().zip(&rhs.data).map(|(&a, &b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Inverse computed through the adjoint: `chi(A^-1) = chi(A)^-1`.
    pub fn inverse(&self, tol: &Tolerances) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let inv = self.complex_adjoint().inverse(tol)?;
        QMatrix::from_complex_adjoint(&inv)
    }

    /// Standard eigenvalues; see [`standard_eigenvalues`].
    pub fn standard_eigenvalues(&self, tol: &Tolerances) -> Result<StandardSpectrum> {
        standard_eigenvalues(self, tol)
    }

    /// Block-diagonal direct sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> QMatrix {
        QMatrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        self.try_add(rhs).expect("matrix sum shape")
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        self.try_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(-1.0)
    }
}

pub(crate) fn complex_diag(values: &[Complex64]) -> QMatrix {
    QMatrix::diag(&values.iter().map(|&z| Quaternion::from(z)).collect::<Vec<_>>())
}
