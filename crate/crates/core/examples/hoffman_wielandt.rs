//! Eigenvalue perturbation checks for quaternion matrices.
//!
//! Run with `cargo run --example hoffman_wielandt`.

use qhw::hw::{hw_check, hw_type_check, non_standard_counterexample};
use qhw::qmat::QMatrix;
use qhw::sampling::{self, trial_rng};
use qhw::{Quaternion, Tolerances};

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();
    let rng = &mut trial_rng(1, 0);

    // Normal pair: matched distance against ||A - B||_F^2.
    let (a, b) = sampling::nearby_normal_pair(4, 0.1, rng);
    let r = hw_check(&a, &b, &tol)?;
    println!("normal pair: {:.6} <= {:.6}: {}", r.lhs, r.rhs, r.holds);

    // Diagonalizable A, arbitrary B: the bound picks up kappa(X)^2.
    let a = sampling::diagonalizable(3, rng);
    let b = &a + &sampling::ginibre(3, rng).scale(0.2);
    let r = hw_type_check(&a, &b, &tol)?;
    println!("diagonalizable A: {:.6} <= {:.6} (kappa {:.4}): {}", r.lhs, r.rhs, r.kappa.unwrap_or(1.0), r.holds);

    // Using 1-i, a right eigenvalue that is not standard, breaks the bound.
    let ns = non_standard_counterexample(&tol)?;
    println!("with 1-i in place of 1+i: matched costs {:?} vs {}", ns.permutation_costs, ns.frobenius_sq);
    println!("standard eigenvalues: {} <= {}", ns.standard.lhs, ns.standard.rhs);

    // A non-normal input is rejected.
    let mut n = QMatrix::identity(2);
    n[(0, 1)] = Quaternion::J;
    match hw_check(&n, &QMatrix::identity(2), &tol) {
        Err(e) => println!("non-normal A: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
