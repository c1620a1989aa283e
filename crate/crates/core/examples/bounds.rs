//! Where the eigenvalues of structured polynomials can lie.
//!
//! Run with `cargo run --example bounds`.

use qhw::poly::{bound_check, BoundClass};
use qhw::sampling::{self, trial_rng};
use qhw::Tolerances;

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();
    let rng = &mut trial_rng(3, 0);
    let cases = [
        (BoundClass::Unitary, sampling::unitary_polynomial(2, 3, rng)),
        (BoundClass::DoublyStochastic, sampling::doubly_stochastic_polynomial(3, 3, rng)),
        (BoundClass::Commuting, sampling::commuting_monic_polynomial(2, 2, rng)),
    ];
    for (class, p) in cases {
        let r = bound_check(&p, class, None, &tol)?;
        let lower = r.lower.map_or("0".to_string(), |l| l.to_string());
        println!("{class:?}: moduli in [{:.4}, {:.4}], bounds ({lower}, {}), holds {}", r.min_modulus, r.max_modulus, r.upper, r.holds);
    }
    Ok(())
}
