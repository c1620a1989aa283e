//! Standard eigenvalues of a quaternion matrix, read from the complex adjoint.
//!
//! Run with `cargo run --example standard_eigenvalues`.

use qhw::app::fmt_complex;
use qhw::qmat::QMatrix;
use qhw::{Quaternion, Tolerances};

fn show(v: &[num_complex::Complex64]) -> String {
    v.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(", ")
}

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();

    // diag(1+i, 1-i): over C the eigenvalues are 1+i and 1-i, but both
    // diagonal entries are similar quaternions, so the standard pair is 1+i twice.
    let a = QMatrix::diag(&[Quaternion::new(1.0, 1.0, 0.0, 0.0), Quaternion::new(1.0, -1.0, 0.0, 0.0)]);
    let s = a.standard_eigenvalues(&tol)?;
    println!("diag(1+i, 1-i): {}", show(&s.values));

    // A full quaternion matrix.
    let b = QMatrix::from_vec(
        2,
        2,
        vec![
            Quaternion::new(1.0, 0.0, 2.0, 0.0),
            Quaternion::new(0.0, 1.0, 0.0, -1.0),
            Quaternion::K,
            Quaternion::new(-1.0, 0.5, 0.0, 0.0),
        ],
    )?;
    let s = b.standard_eigenvalues(&tol)?;
    println!("B: {} (pairing residual {:.1e})", show(&s.values), s.pairing_residual);

    // Each standard eigenvalue and its conjugate appear in the spectrum of chi(B).
    let chi = qhw::clinalg::eigenvalues(&b.complex_adjoint(), &tol)?;
    println!("chi(B): {}", show(&chi.eigenvalues));
    Ok(())
}
