//! Quaternion matrix polynomials: monic form, block companion, and the
//! permutation similarity with the adjoint polynomial's companion.
//!
//! Run with `cargo run --example companion`.

use qhw::app::fmt_complex;
use qhw::io::{read_input, Input};
use qhw::poly::{companion_similarity_witness, hw_compare_poly, hw_type_poly, standard_eigenvalues_poly, MonicForm, QMatrixPolynomial};
use qhw::Tolerances;

fn load(name: &str) -> qhw::Result<QMatrixPolynomial> {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    match read_input(path.as_ref())? {
        Input::Polynomial(p) => Ok(p),
        Input::Matrix(_) => Err(qhw::Error::Parse(format!("{name} holds a matrix"))),
    }
}

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();
    let (p, q) = (load("linear_p.json")?, load("linear_q.json")?);

    // The two monic forms give different companions with the same spectrum here.
    for form in [MonicForm::RightInverse, MonicForm::LeftInverse] {
        let c = p.clone().with_form(form).companion(&tol)?;
        let reals: Vec<f64> = c.matrix.entries().iter().map(|x| x.a0).collect();
        let s = standard_eigenvalues_poly(&p.clone().with_form(form), &tol)?;
        let shown: Vec<String> = s.spectrum.values.iter().map(|z| fmt_complex(*z)).collect();
        println!("{form:?}: C_P = {reals:?}, eigenvalues {}", shown.join(", "));
    }

    let w = companion_similarity_witness(&p, &tol)?;
    println!("block map {:?}, residual {:.1e}", w.block_map, w.residual);

    // Normal coefficients are not enough for the plain bound on companions.
    let r = hw_compare_poly(&p, &q, &tol)?;
    println!("plain: {} vs ||C_P - C_Q||_F^2 = {}, holds {}", r.lhs, r.rhs, r.holds);
    let r = hw_type_poly(&p, &q, &tol)?;
    println!("weighted ({}): {} <= {}, holds {}", r.justification, r.lhs, r.rhs, r.holds);
    Ok(())
}
