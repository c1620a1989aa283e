//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use num_complex::Complex64;
use qhw::clinalg::{self, CMatrix};
use qhw::hw::{hw_check, min_cost_assignment};
use qhw::io::{read_input, Input};
use qhw::poly::{
    bound_check, companion_similarity_witness, diagonalizable_companion_linear, diagonalizable_companion_quadratic_unitary,
    hw_compare_poly, standard_eigenvalues_poly, BoundClass, QMatrixPolynomial,
};
use qhw::qmat::{self, QMatrix};
use qhw::sampling::{self, trial_rng};
use qhw::trials::{self, DiagClass};
use qhw::{Error, Tolerances};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, Box<dyn Fn(&Tolerances) -> Outcome>);

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn matrix(name: &str) -> QMatrix {
    match read_input(fixture(name).as_ref()).unwrap() {
        Input::Matrix(a) => a,
        Input::Polynomial(_) => panic!("{name} is a polynomial"),
    }
}

fn polynomial(name: &str) -> QMatrixPolynomial {
    match read_input(fixture(name).as_ref()).unwrap() {
        Input::Polynomial(p) => p,
        Input::Matrix(_) => panic!("{name} is a matrix"),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.len() == b.len() && multiset_distance(a, b) <= tol
}

fn linear_counterexample(tol: &Tolerances) -> Outcome {
    let r = hw_compare_poly(&polynomial("linear_p.json"), &polynomial("linear_q.json"), tol).map_err(|e| e.to_string())?;
    let rt = 2.0 * 2f64.sqrt();
    ensure((r.frobenius_sq - 27.0).abs() <= 1e-9, || format!("||C_P - C_Q||_F^2 = {}", r.frobenius_sq))?;
    ensure(within(&r.spectrum_a, &[c(-4.0 - rt, 0.0), c(-4.0 + rt, 0.0)], 1e-9), || format!("C_P: {:?}", r.spectrum_a))?;
    ensure(within(&r.spectrum_b, &[c(-4.0, 4.0), c(-4.0, 4.0)], 1e-9), || format!("C_Q: {:?}", r.spectrum_b))?;
    ensure((r.lhs - 48.0).abs() <= 1e-9, || format!("matched cost {}", r.lhs))?;
    let out = Command::new(env!("CARGO_BIN_EXE_qhw"))
        .args(["hw", &fixture("linear_p.json"), &fixture("linear_q.json")])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(1), || format!("hw exited with {:?}", out.status.code()))?;
    Ok(format!("||C_P-C_Q||_F^2 = {}, matched cost = {}, hw exit 1", r.frobenius_sq, r.lhs))
}

fn quadratic_counterexample(tol: &Tolerances) -> Outcome {
    let r = hw_compare_poly(&polynomial("quadratic_p.json"), &polynomial("quadratic_q.json"), tol).map_err(|e| e.to_string())?;
    ensure((r.frobenius_sq - 4.0).abs() <= 1e-9, || format!("||C_P - C_Q||_F^2 = {}", r.frobenius_sq))?;
    let want = [c(1.6163, 0.0), c(-0.4969, 0.8643), c(-0.4969, 0.8643), c(-0.6225, 0.0)];
    let matching = min_cost_assignment(&r.spectrum_a, &want).map_err(|e| e.to_string())?;
    let worst = r.spectrum_a.iter().zip(&matching.permutation).map(|(z, &j)| (z - want[j]).norm()).fold(0.0, f64::max);
    ensure(worst <= 1e-3, || format!("C_P eigenvalues {:?}", r.spectrum_a))?;
    ensure(r.lhs >= 4.5102 - 1e-3, || format!("matched cost {}", r.lhs))?;
    Ok(format!("||C_P-C_Q||_F^2 = {}, eigenvalue error {worst:.1e}, matched cost = {:.6}", r.frobenius_sq, r.lhs))
}

fn normal_pair_nonstandard(tol: &Tolerances) -> Outcome {
    let (a, b) = (matrix("normal_a.json"), matrix("normal_b.json"));
    let r = hw_check(&a, &b, tol).map_err(|e| e.to_string())?;
    ensure(r.holds && (r.lhs - 1.0).abs() <= 1e-9 && (r.rhs - 1.0).abs() <= 1e-9, || format!("lhs {} rhs {}", r.lhs, r.rhs))?;
    // the right eigenvalue 1-i of A against the standard eigenvalues of B
    let mu = [c(1.0, -1.0), c(1.0, 0.0)];
    let delta = [c(0.0, 1.0), c(1.0, 0.0)];
    let oracle = exhaustive_min(&mu, &delta);
    let report = qhw::hw::nonstandard_matching(&a, &b, &mu, &delta, tol).map_err(|e| e.to_string())?;
    ensure(report.min_cost == oracle && oracle > 1.0 && report.fails, || format!("min cost {} (oracle {oracle})", report.min_cost))?;
    Ok(format!("standard: lhs = rhs = {}; non-standard min cost {oracle} > 1", r.lhs))
}

fn complex_diagonal(tol: &Tolerances) -> Outcome {
    let v = qmat::standard_eigenvalues(&matrix("diag_complex_conjugates.json"), tol).map_err(|e| e.to_string())?.values;
    ensure(within(&v, &[c(1.0, 1.0), c(1.0, 1.0)], 1e-10), || format!("{v:?}"))?;
    Ok(format!("standard eigenvalues {:?}", v.iter().map(|z| format!("{z}")).collect::<Vec<_>>()))
}

fn suite_line(r: &qhw::trials::SuiteReport) -> Result<String, String> {
    if r.all_passed() {
        Ok(format!("{} {}/{}, {} {:.3e}", r.name, r.passed, r.trials, r.metric, r.extreme))
    } else {
        Err(format!("{}: {}/{} passed; first failure {:?}", r.name, r.passed, r.trials, r.failures.first()))
    }
}

fn companion_similarity(tol: &Tolerances) -> Outcome {
    let mut worst_residual = 0.0f64;
    let mut worst_gap = 0.0f64;
    for t in 0..100u64 {
        let rng = &mut trial_rng(7007, t);
        let m = 1 + (t % 3) as usize;
        let n = 1 + ((t / 3) % 3) as usize;
        let p = sampling::polynomial(m, n, rng);
        let w = companion_similarity_witness(&p, tol).map_err(|e| e.to_string())?;
        let s = standard_eigenvalues_poly(&p, tol).map_err(|e| e.to_string())?;
        worst_residual = worst_residual.max(w.residual);
        worst_gap = worst_gap.max(multiset_distance(&s.spectrum.values, &s.adjoint_route.values));
    }
    ensure(worst_residual <= 1e-10, || format!("residual {worst_residual:.3e}"))?;
    ensure(worst_gap <= 1e-6, || format!("spectrum routes differ by {worst_gap:.3e}"))?;
    Ok(format!("100 polynomials: max residual {worst_residual:.2e}, max route gap {worst_gap:.2e}"))
}

fn eigenvalue_bounds(tol: &Tolerances) -> Outcome {
    let mut lines = vec![];
    for class in [BoundClass::Unitary, BoundClass::DoublyStochastic, BoundClass::Commuting] {
        let mut margin = f64::INFINITY;
        for t in 0..200u64 {
            let rng = &mut trial_rng(8008 + class as u64, t);
            let m = 1 + (t % 3) as usize;
            let n = 1 + ((t / 3) % 3) as usize;
            let p = trials::bound_polynomial(class, m, n, rng);
            let r = bound_check(&p, class, None, tol).map_err(|e| format!("{class:?} trial {t}: {e}"))?;
            let lo = r.lower.unwrap_or(0.0);
            let strict = r.eigenvalues.iter().all(|z| z.norm() < r.upper && (r.lower.is_none() || z.norm() > lo));
            ensure(strict && r.holds, || format!("{class:?} trial {t}: moduli [{}, {}]", r.min_modulus, r.max_modulus))?;
            margin = margin.min(r.upper_margin).min(r.lower_margin.unwrap_or(f64::INFINITY));
        }
        lines.push(format!("{class:?} min margin {margin:.3e}"));
    }
    Ok(lines.join("; "))
}

fn diagonalizable_classes(tol: &Tolerances) -> Outcome {
    let mut lines = vec![];
    for class in DiagClass::ALL {
        let mut kappa = 1.0f64;
        for t in 0..200u64 {
            let rng = &mut trial_rng(9009 + class as u64, t);
            let p = trials::diag_polynomial(class, 1 + (t % 4) as usize, rng);
            let d = match class {
                DiagClass::QuadraticCommutingUnitary => diagonalizable_companion_quadratic_unitary(&p, tol),
                _ => diagonalizable_companion_linear(&p, tol),
            }
            .map_err(|e| format!("{class:?} trial {t}: {e}"))?;
            ensure(d.diagonalizable, || format!("{class:?} trial {t}: {:?}", d.failure))?;
            kappa = kappa.max(d.kappa.unwrap_or(f64::NAN));
        }
        lines.push(format!("{class:?} max kappa {kappa:.3}"));
    }
    for name in ["defective_normal_linear.json", "defective_triangular.json", "defective_cubic_unitary.json", "quadratic_q.json"] {
        let c = polynomial(name).companion(tol).map_err(|e| e.to_string())?.matrix;
        match qmat::diagonalize(&c, tol) {
            Err(Error::NotDiagonalizable(_)) => {}
            other => return Err(format!("{name}: expected NotDiagonalizable, got {:?}", other.map(|_| "a diagonalization"))),
        }
    }
    lines.push("4 defective instances rejected".into());
    Ok(lines.join("; "))
}

fn cmat_close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
    cmat_frobenius(&(a - b)) <= tol * (1.0 + cmat_frobenius(a))
}

/// The listed properties of the complex adjoint, each on random instances.
fn adjoint_properties(tol: &Tolerances) -> Result<(), String> {
    const T: f64 = 1e-8;
    for t in 0..60u64 {
        let rng = &mut trial_rng(1010, t);
        let n = 1 + (t % 6) as usize;
        let (a, b) = (sampling::ginibre(n, rng), sampling::ginibre(n, rng));
        let (ca, cb) = (adjoint_oracle(&a), adjoint_oracle(&b));
        let alpha = 1.0 + t as f64 / 7.0;
        ensure(QMatrix::identity(n).complex_adjoint() == CMatrix::identity(2 * n), || "identity".into())?;
        ensure(cmat_close(&(&a * &b).complex_adjoint(), &(&ca * &cb), T), || format!("multiplicative n {n}"))?;
        ensure(cmat_close(&a.scale(alpha).complex_adjoint(), &ca.scale_real(alpha), T), || "real scaling".into())?;
        ensure(cmat_close(&(&a + &b).complex_adjoint(), &(&ca + &cb), T), || "additive".into())?;
        ensure(cmat_close(&a.conj_transpose().complex_adjoint(), &ca.adjoint(), T), || "conjugate transpose".into())?;
        let inv = a.inverse(tol).map_err(|e| e.to_string())?;
        let cond = a.spectral_norm().unwrap() * inv.spectral_norm().unwrap();
        let id = &inv.complex_adjoint() * &ca;
        ensure(cmat_frobenius(&(&id - &CMatrix::identity(2 * n))) <= T * cond, || format!("inverse n {n}"))?;

        let u = sampling::unitary(n, rng);
        let h = sampling::hermitian(n, rng);
        let nm = sampling::normal_matrix(n, rng);
        let cu = adjoint_oracle(&u);
        let ch = adjoint_oracle(&h);
        let cn = adjoint_oracle(&nm);
        let e2 = CMatrix::identity(2 * n);
        ensure(qmat::is_unitary(&u, tol.structure) && cmat_close(&(&cu.adjoint() * &cu), &e2, T), || "structure unitary".into())?;
        ensure(qmat::is_hermitian(&h, tol.structure) && cmat_close(&ch, &ch.adjoint(), T), || "structure hermitian".into())?;
        ensure(
            qmat::is_normal(&nm, tol.structure) && cmat_close(&(&cn * &cn.adjoint()), &(&cn.adjoint() * &cn), T),
            || "structure normal".into(),
        )?;
        ensure(qmat::is_invertible(&a, tol.rank) && ca.rank(tol.rank).unwrap() == 2 * n, || "structure invertible".into())?;
        let x = sampling::diagonalizable(n, rng);
        ensure(qmat::diagonalize(&x, tol).is_ok(), || "structure diagonalizable".into())?;
        if n > 1 {
            ensure(!qmat::is_normal(&a, tol.structure) && !qmat::is_unitary(&a, tol.structure), || "structure generic".into())?;
            let mut jordan = QMatrix::identity(n);
            jordan[(0, 1)] = qhw::Quaternion::ONE;
            ensure(matches!(qmat::diagonalize(&jordan, tol), Err(Error::NotDiagonalizable(_))), || "structure defective".into())?;
        }

        let pair = sampling::commuting_unitaries(n, 2, rng);
        let (c0, c1) = (adjoint_oracle(&pair[0]), adjoint_oracle(&pair[1]));
        ensure(qmat::commutes(&pair[0], &pair[1], T) && cmat_close(&(&c0 * &c1), &(&c1 * &c0), T), || "commutation commuting".into())?;
        if n > 1 {
            ensure(!qmat::commutes(&a, &b, T) && !cmat_close(&(&ca * &cb), &(&cb * &ca), T), || "commutation generic".into())?;
        }

        let s = qmat::standard_eigenvalues(&a, tol).map_err(|e| e.to_string())?.values;
        let ev = clinalg::eigenvalues(&ca, tol).map_err(|e| e.to_string())?.eigenvalues;
        let doubled: Vec<_> = s.iter().flat_map(|z| [*z, z.conj()]).collect();
        ensure(multiset_distance(&doubled, &ev) <= 1e-6 * (1.0 + a.frobenius_norm()), || format!("folded spectrum n {n}"))?;

        if n > 1 {
            let g = sampling::complex_ginibre(n, rng);
            let gi = g.inverse(tol).map_err(|e| e.to_string())?;
            let mut d = CMatrix::diag(&(0..n).map(|k| c(k as f64, 1.0)).collect::<Vec<_>>());
            let diagonalizable = QMatrix::from_complex(&(&(&g * &d) * &gi));
            d[(1, 1)] = d[(0, 0)];
            d[(0, 1)] = c(1.0, 0.0);
            let defective = QMatrix::from_complex(&(&(&g * &d) * &gi));
            ensure(qmat::diagonalize(&diagonalizable, tol).is_ok(), || format!("diagonalizable n {n}"))?;
            ensure(matches!(qmat::diagonalize(&defective, tol), Err(Error::NotDiagonalizable(_))), || format!("defective n {n}"))?;
        }
    }
    Ok(())
}

fn kernel_oracles(tol: &Tolerances) -> Outcome {
    for t in 0..600u64 {
        let rng = &mut trial_rng(1111, t);
        let n = 1 + (t % 6) as usize;
        let l: Vec<Complex64> = (0..n).map(|_| sampling::quaternion(rng).co()).collect();
        let m: Vec<Complex64> = (0..n).map(|_| sampling::quaternion(rng).co()).collect();
        let r = min_cost_assignment(&l, &m).map_err(|e| e.to_string())?;
        ensure(r.cost == exhaustive_min(&l, &m), || format!("assignment trial {t}: {} vs {}", r.cost, exhaustive_min(&l, &m)))?;
    }
    let mut worst = 0.0f64;
    for t in 0..1000u64 {
        let rng = &mut trial_rng(1212, t);
        let n = 1 + (t % 16) as usize;
        let a = sampling::complex_ginibre(n, rng);
        let e = clinalg::eigen_full(&a, tol).map_err(|e| e.to_string())?;
        let v = e.eigenvectors.unwrap();
        let af = cmat_frobenius(&a);
        for (k, lam) in e.eigenvalues.iter().enumerate() {
            let x = v.column(k);
            let ax = a.mul_vec(&x);
            let r = ax.iter().zip(&x).map(|(p, q)| (p - q * lam).norm_sqr()).sum::<f64>().sqrt();
            let xn = x.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
            worst = worst.max(r / (xn * af));
        }
    }
    ensure(worst <= 1e-8, || format!("eigensolver residual {worst:.3e}"))?;
    adjoint_properties(tol)?;
    Ok(format!("600 assignments exact; eigensolver max residual {worst:.2e}; complex adjoint properties pass"))
}

fn main() {
    let tol = Tolerances::default();
    let criteria: Vec<Criterion> = vec![
        ("1 linear normal-coefficient counterexample", Some(Duration::from_secs(1)), Box::new(linear_counterexample)),
        ("2 quadratic unitary counterexample", Some(Duration::from_secs(1)), Box::new(quadratic_counterexample)),
        ("3 normal pair with non-standard eigenvalue", None, Box::new(normal_pair_nonstandard)),
        ("4 standard eigenvalues of diag(1+i, 1-i)", None, Box::new(complex_diagonal)),
        ("5 Frobenius bound, 500 normal pairs", Some(Duration::from_secs(60)), Box::new(|t| suite_line(&trials::hw_normal(500, 5005, t)))),
        ("6 weighted bound, 500 diagonalizable pairs", None, Box::new(|t| suite_line(&trials::hw_diagonalizable(500, 6006, t)))),
        ("7 companion permutation similarity", None, Box::new(companion_similarity)),
        ("8 eigenvalue location bounds", None, Box::new(eigenvalue_bounds)),
        ("9 companion diagonalizability", None, Box::new(diagonalizable_classes)),
        ("10 kernel oracles", None, Box::new(kernel_oracles)),
    ];
    let mut failed = 0;
    for (name, limit, check) in &criteria {
        let start = Instant::now();
        let outcome = check(&tol);
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > *limit => Err(format!("took {elapsed:.2?}, limit {limit:.2?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
