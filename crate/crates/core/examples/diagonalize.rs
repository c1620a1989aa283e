//! Diagonalizing quaternion matrices and block companions.
//!
//! Run with `cargo run --example diagonalize`.

use qhw::poly::{diagonalizable_companion_linear, diagonalizable_companion_quadratic_unitary, QMatrixPolynomial};
use qhw::qmat::{diagonalize, QMatrix};
use qhw::sampling::{self, trial_rng};
use qhw::{Quaternion, Tolerances};

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();

    let a = QMatrix::diag(&[Quaternion::J, Quaternion::K]);
    let d = diagonalize(&a, &tol)?;
    let shown: Vec<String> = d.spectrum.values.iter().map(|z| qhw::app::fmt_complex(*z)).collect();
    println!("diag(j, k): eigenvalues {}, kappa {:.3}", shown.join(", "), d.condition_number(&tol)?);

    let mut jordan = QMatrix::identity(2).scale(2.0);
    jordan[(0, 1)] = Quaternion::ONE;
    println!("Jordan block: {}", diagonalize(&jordan, &tol).unwrap_err());

    let rng = &mut trial_rng(5, 0);
    let p = QMatrixPolynomial::new(vec![sampling::positive_semidefinite(3, 1, rng), sampling::positive_definite(3, rng)])?;
    let r = diagonalizable_companion_linear(&p, &tol)?;
    println!("{}: kappa {:.4}", r.justification, r.kappa.unwrap_or(f64::NAN));

    let mut u = sampling::commuting_unitaries(2, 2, rng);
    u.push(QMatrix::identity(2));
    let r = diagonalizable_companion_quadratic_unitary(&QMatrixPolynomial::new(u)?, &tol)?;
    println!("{}: kappa {:.4}", r.justification, r.kappa.unwrap_or(f64::NAN));
    Ok(())
}
