//! Hoffman-Wielandt checks for quaternion matrices.
//!
//! For normal `A`, `B` with standard eigenvalues `mu`, `delta` some
//! permutation satisfies `sum |mu_i - delta_pi(i)|^2 <= ||A - B||_F^2`. If
//! `A = X D X^-1` is only diagonalizable, the bound picks up `kappa(X)^2`.
//! The left side is evaluated at the optimal permutation.

mod assign;
mod fold;

pub use assign::{cost_matrix, min_cost_assignment, permutation_cost, AssignmentResult};
pub use fold::{conjugate_doubled, fold_conjugate_assignment, Fold};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::Tolerances;
use crate::error::{Error, Operand, Result};
use crate::qmat::{condition_number, diagonalize, is_normal, standard_eigenvalues, QMatrix};

/// Which right-hand side was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `||A - B||_F^2`.
    Frobenius,
    /// `kappa(X)^2 ||A - B||_F^2`.
    ConditionWeighted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub bound: Bound,
    /// Optimal matched squared distance between the standard spectra.
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub slack: f64,
    pub holds: bool,
    /// 1-based: `mu_i` is matched with `delta_{permutation[i-1]}`.
    pub permutation: Vec<usize>,
    pub frobenius_sq: f64,
    pub kappa: Option<f64>,
    pub spectrum_a: Vec<Complex64>,
    pub spectrum_b: Vec<Complex64>,
    /// Why the matrices qualify for the bound, e.g. "normal".
    pub justification: String,
    /// SHA-256 of the two inputs.
    pub digests: [String; 2],
}

impl InequalityReport {
    /// Builds a report, evaluating `holds` as `lhs <= rhs (1 + t) + t`.
    #[allow(clippy::too_many_arguments)]
    fn new(
        bound: Bound,
        assignment: &AssignmentResult,
        frobenius_sq: f64,
        kappa: Option<f64>,
        spectra: (Vec<Complex64>, Vec<Complex64>),
        justification: &str,
        digests: [String; 2],
        tol: &Tolerances,
    ) -> Self {
        let lhs = assignment.cost;
        let rhs = kappa.map_or(frobenius_sq, |k| k * k * frobenius_sq);
        InequalityReport {
            bound,
            lhs,
            rhs,
            slack: rhs - lhs,
            holds: inequality_holds(lhs, rhs, tol.inequality),
            permutation: assignment.permutation.iter().map(|&j| j + 1).collect(),
            frobenius_sq,
            kappa,
            spectrum_a: spectra.0,
            spectrum_b: spectra.1,
            justification: justification.to_string(),
            digests,
        }
    }
}

pub fn inequality_holds(lhs: f64, rhs: f64, t: f64) -> bool {
    lhs <= rhs * (1.0 + t) + t
}

/// SHA-256 over the dimensions and the little-endian bytes of every component.
pub fn matrix_digest(a: &QMatrix) -> String {
    let mut h = Sha256::new();
    h.update((a.rows() as u64).to_le_bytes());
    h.update((a.cols() as u64).to_le_bytes());
    for q in a.entries() {
        for x in <[f64; 4]>::from(*q) {
            h.update(x.to_le_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn check_pair(a: &QMatrix, b: &QMatrix) -> Result<()> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} and {}x{} are not square of the same order",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

fn compare(
    a: &QMatrix,
    b: &QMatrix,
    kappa: Option<f64>,
    justification: &str,
    tol: &Tolerances,
) -> Result<InequalityReport> {
    let sa = standard_eigenvalues(a, tol)?.values;
    let sb = standard_eigenvalues(b, tol)?.values;
    let assignment = min_cost_assignment(&sa, &sb)?;
    let frobenius_sq = (a - b).frobenius_norm().powi(2);
    let bound = if kappa.is_some() { Bound::ConditionWeighted } else { Bound::Frobenius };
    Ok(InequalityReport::new(
        bound,
        &assignment,
        frobenius_sq,
        kappa,
        (sa, sb),
        justification,
        [matrix_digest(a), matrix_digest(b)],
        tol,
    ))
}

/// Evaluates the Frobenius bound without checking any hypothesis.
pub fn hw_compare(a: &QMatrix, b: &QMatrix, tol: &Tolerances) -> Result<InequalityReport> {
    check_pair(a, b)?;
    compare(a, b, None, "unchecked", tol)
}

/// The inequality for normal matrices. Both operands must be normal at
/// `tol.structure`.
pub fn hw_check(a: &QMatrix, b: &QMatrix, tol: &Tolerances) -> Result<InequalityReport> {
    check_pair(a, b)?;
    if !is_normal(a, tol.structure) {
        return Err(Error::NotNormal(Operand::A));
    }
    if !is_normal(b, tol.structure) {
        return Err(Error::NotNormal(Operand::B));
    }
    compare(a, b, None, "normal", tol)
}

/// The condition-weighted inequality, with `X` taken from [`diagonalize`].
pub fn hw_type_check(a: &QMatrix, b: &QMatrix, tol: &Tolerances) -> Result<InequalityReport> {
    check_pair(a, b)?;
    let d = diagonalize(a, tol)?;
    let kappa = d.condition_number(tol)?;
    compare(a, b, Some(kappa), "diagonalizable", tol)
}

/// The condition-weighted inequality for a caller-supplied diagonalizer of `a`.
/// `X^-1 A X` must be diagonal within `tol.diag_verify`.
pub fn hw_type_check_with(
    a: &QMatrix,
    b: &QMatrix,
    x: &QMatrix,
    justification: &str,
    tol: &Tolerances,
) -> Result<InequalityReport> {
    check_pair(a, b)?;
    let xinv = x.inverse(tol)?;
    let d = &(&xinv * a) * x;
    let off: f64 = (0..d.rows())
        .flat_map(|i| (0..d.cols()).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| d[(i, j)].norm_sqr())
        .sum::<f64>()
        .sqrt();
    if off > tol.diag_verify * a.frobenius_norm().max(f64::MIN_POSITIVE) {
        return Err(Error::NotDiagonalizable(format!("supplied X leaves off-diagonal mass {off:.3e}")));
    }
    let kappa = condition_number(x, tol)?;
    compare(a, b, Some(kappa), justification, tol)
}

/// Non-standard right eigenvalues can break the inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonStandardReport {
    /// Right eigenvalues of `A` outside the upper half plane.
    pub mu: Vec<Complex64>,
    pub delta: Vec<Complex64>,
    /// Cost of each permutation of `delta`, in lexicographic order.
    pub permutation_costs: Vec<f64>,
    pub min_cost: f64,
    pub frobenius_sq: f64,
    /// True when every permutation exceeds `frobenius_sq`.
    pub fails: bool,
    /// The same comparison with standard eigenvalues.
    pub standard: InequalityReport,
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Matches arbitrary right eigenvalues by brute force over all permutations.
pub fn nonstandard_matching(
    a: &QMatrix,
    b: &QMatrix,
    mu: &[Complex64],
    delta: &[Complex64],
    tol: &Tolerances,
) -> Result<NonStandardReport> {
    check_pair(a, b)?;
    if mu.len() != a.rows() || delta.len() != b.rows() {
        return Err(Error::LengthMismatch(mu.len(), delta.len()));
    }
    let c = cost_matrix(mu, delta);
    let permutation_costs: Vec<f64> = all_permutations(mu.len()).iter().map(|p| permutation_cost(&c, p)).collect();
    let min_cost = permutation_costs.iter().copied().fold(f64::INFINITY, f64::min);
    let frobenius_sq = (a - b).frobenius_norm().powi(2);
    let standard = hw_check(a, b, tol)?;
    Ok(NonStandardReport {
        mu: mu.to_vec(),
        delta: delta.to_vec(),
        permutation_costs,
        min_cost,
        frobenius_sq,
        fails: !inequality_holds(min_cost, frobenius_sq, tol.inequality),
        standard,
    })
}

/// `A = diag(1+i, 1)`, `B = diag(i, 1)` with the right eigenvalue `1-i` of `A`
/// used in place of the standard `1+i`.
pub fn non_standard_counterexample(tol: &Tolerances) -> Result<NonStandardReport> {
    use crate::quat::Quaternion;
    let a = QMatrix::diag(&[Quaternion::new(1.0, 1.0, 0.0, 0.0), Quaternion::ONE]);
    let b = QMatrix::diag(&[Quaternion::I, Quaternion::ONE]);
    let mu = [Complex64::new(1.0, -1.0), Complex64::new(1.0, 0.0)];
    let delta = [Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)];
    nonstandard_matching(&a, &b, &mu, &delta, tol)
}
