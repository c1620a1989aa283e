//! Reading matrices and polynomials from JSON and emitting reports.
//!
//! Run with `cargo run --example file_formats`.

use qhw::hw::hw_check;
use qhw::io::{self, Input};
use qhw::Tolerances;

const A: &str = r#"{"rows": 2, "cols": 2, "entries": [[[1, 1], [0, 0]], [[0, 0], [1, 0]]]}"#;
const B: &str = r#"{"rows": 2, "cols": 2, "entries": [[[0, 1], [0, 0]], [[0, 0], [1, 0, 0, 0]]]}"#;

fn main() -> qhw::Result<()> {
    let tol = Tolerances::default();
    let (a, b) = (io::parse_matrix(A)?, io::parse_matrix(B)?);
    let report = hw_check(&a, &b, &tol)?;
    println!("{}", io::emit(&report));

    match io::parse_input(r#"{"rows": 1, "cols": 2, "entries": [[[1, 0]]]}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(Input::Matrix(_) | Input::Polynomial(_)) => unreachable!(),
    }
    let path = format!("{}/fixtures/quadratic_p.json", env!("CARGO_MANIFEST_DIR"));
    if let Input::Polynomial(p) = io::read_input(path.as_ref())? {
        println!("quadratic_p.json: size {}, degree {}", p.size(), p.degree());
    }
    Ok(())
}
