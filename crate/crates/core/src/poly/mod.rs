//! Right quaternion matrix polynomials `P(l) = sum_i A_i l^i` and their
//! block companion linearization.

mod bounds;
mod classes;

pub use bounds::{bound_check, bound_check_commuting_disc, bound_check_doubly_stochastic, bound_check_unitary, BoundClass, BoundReport};
pub use classes::{
    diagonalizable_companion_linear, diagonalizable_companion_quadratic_unitary, hw_compare_poly, hw_type_poly,
    CompanionDiagonalization, LinearClass,
};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clinalg::{self, CMatrix};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::hw::min_cost_assignment;
use crate::qmat::{fold_conjugate_pairs, is_invertible, standard_eigenvalues, QMatrix, StandardSpectrum};

/// Side on which the inverse of the leading coefficient is applied when
/// forming the monic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonicForm {
    /// `B_i = A_i A_m^-1`.
    #[default]
    RightInverse,
    /// `B_i = A_m^-1 A_i`. Preserves right eigenvalues for every `A_m`.
    LeftInverse,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QMatrixPolynomial {
    coefficients: Vec<QMatrix>,
    form: MonicForm,
}

impl QMatrixPolynomial {
    /// Coefficients in ascending degree; at least two, all square of one size.
    pub fn new(coefficients: Vec<QMatrix>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::ShapeMismatch(format!("degree must be at least 1, got {} coefficient(s)", coefficients.len())));
        }
        let n = coefficients[0].rows();
        if n == 0 {
            return Err(Error::ShapeMismatch("coefficients must be nonempty".into()));
        }
        if let Some(i) = coefficients.iter().position(|c| c.rows() != n || c.cols() != n) {
            return Err(Error::ShapeMismatch(format!(
                "coefficient {i} is {}x{}, expected {n}x{n}",
                coefficients[i].rows(),
                coefficients[i].cols()
            )));
        }
        Ok(QMatrixPolynomial { coefficients, form: MonicForm::default() })
    }

    pub fn with_form(mut self, form: MonicForm) -> Self {
        self.form = form;
        self
    }

    pub fn form(&self) -> MonicForm {
        self.form
    }

    pub fn size(&self) -> usize {
        self.coefficients[0].rows()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[QMatrix] {
        &self.coefficients
    }

    pub fn leading(&self) -> &QMatrix {
        &self.coefficients[self.degree()]
    }

    /// Leading coefficient within `tol` of the identity, entrywise.
    pub fn is_monic(&self, tol: f64) -> bool {
        self.leading().max_abs_diff(&QMatrix::identity(self.size())) <= tol
    }

    /// `sum_i A_i x l^i` for a quaternion vector `x` and scalar `l`.
    pub fn apply(&self, x: &QMatrix, l: crate::quat::Quaternion) -> QMatrix {
        let mut acc = QMatrix::zeros(self.size(), x.cols());
        let mut power = crate::quat::Quaternion::ONE;
        for a in &self.coefficients {
            acc = &acc + &(a * &x.right_mul_scalar(power));
            power = power * l;
        }
        acc
    }

    /// Monic polynomial with `B_i` per [`MonicForm`]; `B_m = I`.
    pub fn monicize(&self, tol: &Tolerances) -> Result<QMatrixPolynomial> {
        let m = self.degree();
        let n = self.size();
        let am = self.leading();
        if !is_invertible(am, tol.rank) {
            return Err(Error::SingularLeadingCoefficient);
        }
        let inv = am.inverse(tol).map_err(|_| Error::SingularLeadingCoefficient)?;
        let mut coefficients = Vec::with_capacity(m + 1);
        for a in &self.coefficients[..m] {
            let (b, back) = match self.form {
                MonicForm::RightInverse => {
                    let b = a * &inv;
                    let back = &b * am;
                    (b, back)
                }
                MonicForm::LeftInverse => {
                    let b = &inv * a;
                    let back = am * &b;
                    (b, back)
                }
            };
            if (&back - a).frobenius_norm() > tol.scalar * (1.0 + a.frobenius_norm()) {
                return Err(Error::SingularLeadingCoefficient);
            }
            coefficients.push(b);
        }
        coefficients.push(QMatrix::identity(n));
        Ok(QMatrixPolynomial { coefficients, form: self.form })
    }

    /// Block companion matrix: identity blocks on the block superdiagonal and
    /// `-B_0, ..., -B_{m-1}` in the last block row. For `m = 1` this is `-B_0`.
    pub fn companion(&self, tol: &Tolerances) -> Result<CompanionMatrix> {
        let monic = self.monicize(tol)?;
        let (m, n) = (self.degree(), self.size());
        let mut c = QMatrix::zeros(m * n, m * n);
        for r in 0..m - 1 {
            c.set_block(r * n, (r + 1) * n, &QMatrix::identity(n));
        }
        for (i, b) in monic.coefficients[..m].iter().enumerate() {
            c.set_block((m - 1) * n, i * n, &-b);
        }
        Ok(CompanionMatrix { matrix: c, monic_coefficients: monic.coefficients[..m].to_vec() })
    }

    /// `P_chi(l) = sum_i chi(A_i) l^i`.
    pub fn adjoint_polynomial(&self) -> ComplexMatrixPolynomial {
        ComplexMatrixPolynomial {
            coefficients: self.coefficients.iter().map(QMatrix::complex_adjoint).collect(),
            form: self.form,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix {
    pub matrix: QMatrix,
    /// `B_0, ..., B_{m-1}`.
    pub monic_coefficients: Vec<QMatrix>,
}

/// A complex matrix polynomial, used for the adjoint polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrixPolynomial {
    pub coefficients: Vec<CMatrix>,
    pub form: MonicForm,
}

impl ComplexMatrixPolynomial {
    pub fn size(&self) -> usize {
        self.coefficients[0].rows()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Block companion matrix with the same layout as the quaternion one.
    pub fn companion(&self, tol: &Tolerances) -> Result<CMatrix> {
        let (m, n) = (self.degree(), self.size());
        let am = &self.coefficients[m];
        let inv = clinalg::inverse(am, tol).map_err(|_| Error::SingularLeadingCoefficient)?;
        let mut c = CMatrix::zeros(m * n, m * n);
        for r in 0..m - 1 {
            c.set_block(r * n, (r + 1) * n, &CMatrix::identity(n));
        }
        for (i, a) in self.coefficients[..m].iter().enumerate() {
            let b = match self.form {
                MonicForm::RightInverse => a * &inv,
                MonicForm::LeftInverse => &inv * a,
            };
            c.set_block((m - 1) * n, i * n, &-&b);
        }
        Ok(c)
    }
}

/// The block permutation relating `chi(C_P)` and the companion of `P_chi`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityWitness {
    /// `block_map[r] = s`: n-block `r` of `chi(C_P)` is n-block `s` of the
    /// adjoint companion (0-based, on a `2m x 2m` grid).
    pub block_map: Vec<usize>,
    pub permutation: CMatrix,
    /// `||chi(C_P) - Perm C_{P_chi} Perm^T||_F`.
    pub residual: f64,
}

/// Block rows `0..m` go to `0, 2, 4, ...`; rows `m..2m` go to `1, 3, 5, ...`.
pub fn block_map(m: usize) -> Vec<usize> {
    (0..m).map(|r| 2 * r).chain((0..m).map(|r| 2 * r + 1)).collect()
}

pub fn companion_similarity_witness(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<SimilarityWitness> {
    let (m, n) = (p.degree(), p.size());
    let chi_c = p.companion(tol)?.matrix.complex_adjoint();
    let c_chi = p.adjoint_polynomial().companion(tol)?;
    let map = block_map(m);
    let size = 2 * m * n;
    let mut perm = CMatrix::zeros(size, size);
    for (r, &s) in map.iter().enumerate() {
        perm.set_block(r * n, s * n, &CMatrix::identity(n));
    }
    let residual = (&chi_c - &(&(&perm * &c_chi) * &perm.transpose())).frobenius_norm();
    Ok(SimilarityWitness { block_map: map, permutation: perm, residual })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolySpectrum {
    /// Standard eigenvalues of the companion matrix.
    pub spectrum: StandardSpectrum,
    /// The same values obtained by folding the spectrum of the adjoint
    /// polynomial's companion.
    pub adjoint_route: StandardSpectrum,
    /// Largest distance between the two routes under optimal matching.
    pub discrepancy: f64,
}

/// Largest pairwise distance under the optimal matching of two spectra.
pub fn matched_distance(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    let r = min_cost_assignment(a, b)?;
    Ok(r.permutation.iter().enumerate().map(|(i, &j)| (a[i] - b[j]).norm()).fold(0.0, f64::max))
}

/// Standard eigenvalues of `P`, checked against the adjoint-polynomial route.
pub fn standard_eigenvalues_poly(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<PolySpectrum> {
    let c = p.companion(tol)?.matrix;
    let spectrum = standard_eigenvalues(&c, tol)?;
    let c_chi = p.adjoint_polynomial().companion(tol)?;
    let ev = clinalg::eigenvalues(&c_chi, tol)?.eigenvalues;
    let adjoint_route = fold_conjugate_pairs(&ev, tol.pairing * c_chi.frobenius_norm(), tol.real_clamp)?;
    let discrepancy = matched_distance(&spectrum.values, &adjoint_route.values)?;
    let scale = 1.0 + spectrum.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let threshold = tol.cross_check * scale;
    if discrepancy > threshold {
        return Err(Error::CrossCheck { discrepancy, threshold });
    }
    Ok(PolySpectrum { spectrum, adjoint_route, discrepancy })
}
