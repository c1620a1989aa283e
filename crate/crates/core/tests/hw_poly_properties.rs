mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use qhw::clinalg::{self, CMatrix};
use qhw::hw::{hw_check, hw_type_check, inequality_holds, InequalityReport};
use qhw::io;
use qhw::poly::{bound_check, companion_similarity_witness, BoundClass, standard_eigenvalues_poly, MonicForm, QMatrixPolynomial};
use qhw::qmat::QMatrix;
use qhw::sampling::{self, trial_rng};
use qhw::trials;
use qhw::{Quaternion, Tolerances};

fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

/// Smallest singular value of `sum_i chi(A_i) l^i`, relative to the
/// coefficient scale.
fn adjoint_determinant_residual(p: &QMatrixPolynomial, l: Complex64) -> f64 {
    let n = 2 * p.size();
    let mut acc = CMatrix::zeros(n, n);
    let mut power = c(1.0, 0.0);
    let mut scale = 0.0;
    for a in p.coefficients() {
        let chi = adjoint_oracle(a);
        scale += cmat_frobenius(&chi) * power.norm();
        acc = &acc + &chi.scale(power);
        power *= l;
    }
    let sv = clinalg::svd(&acc).unwrap().singular_values;
    sv.iter().cloned().fold(f64::INFINITY, f64::min) / scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frobenius_bound_holds_for_normal_pairs(seed in seeds(), n in 1usize..7, near in any::<bool>()) {
        let tol = Tolerances::default();
        let rng = &mut trial_rng(seed, 0);
        let (a, b) = if near {
            sampling::nearby_normal_pair(n, 0.1, rng)
        } else {
            (sampling::normal_matrix(n, rng), sampling::normal_matrix(n, rng))
        };
        let r = hw_check(&a, &b, &tol).unwrap();
        prop_assert!(r.holds, "lhs {} rhs {}", r.lhs, r.rhs);
        prop_assert!((r.frobenius_sq - qmat_frobenius_sq(&(&a - &b))).abs() <= 1e-10 * (1.0 + r.frobenius_sq));
        prop_assert!((r.lhs - exhaustive_min(&r.spectrum_a, &r.spectrum_b)).abs() <= 1e-12 * (1.0 + r.lhs));
    }

    #[test]
    fn weighted_bound_holds_for_diagonalizable_a(seed in seeds(), n in 1usize..6) {
        let tol = Tolerances::default();
        let rng = &mut trial_rng(seed, 1);
        let a = sampling::diagonalizable(n, rng);
        let b = sampling::ginibre(n, rng);
        let r = hw_type_check(&a, &b, &tol).unwrap();
        let k = r.kappa.unwrap();
        prop_assert!(k >= 1.0 - 1e-10);
        prop_assert!(r.holds, "lhs {} rhs {} kappa {}", r.lhs, r.rhs, k);
        prop_assert!((r.rhs - k * k * r.frobenius_sq).abs() <= 1e-12 * (1.0 + r.rhs));
    }

    #[test]
    fn both_sides_scale_quadratically(seed in seeds(), n in 1usize..5, t in 0.1..10.0f64) {
        let tol = Tolerances::default();
        let rng = &mut trial_rng(seed, 2);
        let (a, b) = (sampling::normal_matrix(n, rng), sampling::normal_matrix(n, rng));
        let r = hw_check(&a, &b, &tol).unwrap();
        let s = hw_check(&a.scale(t), &b.scale(t), &tol).unwrap();
        let t2 = t * t;
        prop_assert!((s.rhs - t2 * r.rhs).abs() <= 1e-10 * (1.0 + s.rhs));
        prop_assert!((s.lhs - t2 * r.lhs).abs() <= 1e-8 * (1.0 + s.lhs));
        prop_assert_eq!(s.holds, r.holds);
    }

    #[test]
    fn moving_b_away_grows_the_frobenius_side(seed in seeds(), n in 1usize..5, t in 1.0..4.0f64) {
        let tol = Tolerances::default();
        let rng = &mut trial_rng(seed, 3);
        let a = sampling::normal_matrix(n, rng);
        // a real polynomial in A keeps A + tD normal
        let d = &(&a * &a) + &QMatrix::identity(n).scale(0.5);
        let near = hw_check(&a, &(&a + &d), &tol).unwrap();
        let far = hw_check(&a, &(&a + &d.scale(t)), &tol).unwrap();
        prop_assert!(far.rhs >= near.rhs * (1.0 - 1e-12));
        prop_assert!(near.holds && far.holds);
        prop_assert_eq!(hw_check(&a, &a, &tol).unwrap().lhs, 0.0);
    }

    #[test]
    fn reports_round_trip_through_json(seed in seeds(), n in 1usize..5) {
        let tol = Tolerances::default();
        let rng = &mut trial_rng(seed, 4);
        let r = hw_check(&sampling::normal_matrix(n, rng), &sampling::normal_matrix(n, rng), &tol).unwrap();
        let text = io::emit(&r);
        prop_assert!(!text.contains('\n'));
        let back: InequalityReport = io::parse_report(&text).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn matrix_files_round_trip(a in sized_qmatrix(4)) {
        prop_assert_eq!(io::parse_matrix(&io::matrix_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn inequality_rule(lhs in 0.0..10.0f64, rhs in 0.0..10.0f64) {
        prop_assert_eq!(inequality_holds(lhs, rhs, 0.0), lhs <= rhs);
        prop_assert!(inequality_holds(rhs, rhs, 1e-9));
    }

    #[test]
    fn left_form_preserves_eigenvalues(seed in seeds(), m in 1usize..4, n in 1usize..4) {
        let tol = Tolerances::default();
        let p = sampling::polynomial(m, n, &mut trial_rng(seed, 5)).with_form(MonicForm::LeftInverse);
        let monic = p.monicize(&tol).unwrap();
        prop_assert!(monic.is_monic(0.0));
        let s = standard_eigenvalues_poly(&p, &tol).unwrap();
        prop_assert_eq!(s.spectrum.values.len(), m * n);
        for l in &s.spectrum.values {
            prop_assert!(adjoint_determinant_residual(&p, *l) <= 1e-7, "{l}: {}", adjoint_determinant_residual(&p, *l));
            prop_assert!(adjoint_determinant_residual(&monic, *l) <= 1e-7);
        }
    }

    #[test]
    fn forms_agree_for_scalar_leading_coefficient(seed in seeds(), m in 1usize..4, n in 1usize..4, s in 0.5..3.0f64) {
        let tol = Tolerances::default();
        let p = sampling::polynomial(m, n, &mut trial_rng(seed, 6));
        let mut coefficients = p.coefficients().to_vec();
        coefficients[m] = QMatrix::identity(n).scale(s);
        let right = QMatrixPolynomial::new(coefficients).unwrap();
        let left = right.clone().with_form(MonicForm::LeftInverse);
        let a = standard_eigenvalues_poly(&right, &tol).unwrap().spectrum.values;
        let b = standard_eigenvalues_poly(&left, &tol).unwrap().spectrum.values;
        prop_assert!(multiset_distance(&a, &b) <= 1e-8 * (1.0 + p.coefficients().iter().map(|c| c.frobenius_norm()).sum::<f64>()));
    }

    #[test]
    fn companion_layout(seed in seeds(), m in 1usize..4, n in 1usize..4, left in any::<bool>()) {
        let tol = Tolerances::default();
        let form = if left { MonicForm::LeftInverse } else { MonicForm::RightInverse };
        let p = sampling::polynomial(m, n, &mut trial_rng(seed, 7)).with_form(form);
        let comp = p.companion(&tol).unwrap();
        let c = &comp.matrix;
        prop_assert_eq!((c.rows(), c.cols()), (m * n, m * n));
        for r in 0..m - 1 {
            for s in 0..m {
                let want = if s == r + 1 { QMatrix::identity(n) } else { QMatrix::zeros(n, n) };
                prop_assert_eq!(c.block(r * n, s * n, n, n), want);
            }
        }
        let am = p.leading();
        for (i, a) in p.coefficients()[..m].iter().enumerate() {
            let b = -&c.block((m - 1) * n, i * n, n, n);
            let back = if left { am * &b } else { &b * am };
            prop_assert!((&back - a).frobenius_norm() <= 1e-10 * (1.0 + a.frobenius_norm()));
        }
        let adj = p.adjoint_polynomial();
        prop_assert_eq!(adj.degree(), m);
        prop_assert_eq!(adj.coefficients[m].clone(), adjoint_oracle(am));
    }

    #[test]
    fn companion_permutation_similarity(seed in seeds(), m in 1usize..4, n in 1usize..4) {
        let tol = Tolerances::default();
        let p = sampling::polynomial(m, n, &mut trial_rng(seed, 8));
        let w = companion_similarity_witness(&p, &tol).unwrap();
        let size = 2 * m * n;
        let pt = w.permutation.transpose();
        prop_assert_eq!(&(&w.permutation * &pt), &CMatrix::identity(size));
        let scale = 1.0 + cmat_frobenius(&p.companion(&tol).unwrap().matrix.complex_adjoint());
        prop_assert!(w.residual <= 1e-10 * scale);
        let s = standard_eigenvalues_poly(&p, &tol).unwrap();
        prop_assert!(s.discrepancy <= 1e-6);
    }
}

#[test]
fn identity_leading_coefficient_is_left_unchanged() {
    let tol = Tolerances::default();
    let mut rng = trial_rng(31, 0);
    let a0 = sampling::ginibre(2, &mut rng);
    let a1 = sampling::ginibre(2, &mut rng);
    let p = QMatrixPolynomial::new(vec![a0.clone(), a1.clone(), QMatrix::identity(2)]).unwrap();
    for form in [MonicForm::RightInverse, MonicForm::LeftInverse] {
        let m = p.clone().with_form(form).monicize(&tol).unwrap();
        assert_eq!(m.coefficients()[0], a0);
        assert_eq!(m.coefficients()[1], a1);
    }
}

#[test]
fn scalar_eigenvalue_of_a_diagonal_polynomial() {
    // P(l) = I l - diag(j, 2): standard eigenvalues i and 2
    let tol = Tolerances::default();
    let d = QMatrix::diag(&[Quaternion::J, Quaternion::real(2.0)]);
    let p = QMatrixPolynomial::new(vec![-&d, QMatrix::identity(2)]).unwrap();
    let s = standard_eigenvalues_poly(&p, &tol).unwrap().spectrum.values;
    assert!(multiset_distance(&s, &[c(0.0, 1.0), c(2.0, 0.0)]) <= 1e-12);
}

#[test]
fn suites_are_deterministic() {
    let tol = Tolerances::default();
    let a = io::emit(&trials::all(6, 42, &tol));
    let b = io::emit(&trials::all(6, 42, &tol));
    assert_eq!(a, b);
    assert_ne!(a, io::emit(&trials::all(6, 43, &tol)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn class_bounds_hold(seed in seeds(), m in 1usize..4, n in 1usize..4) {
        let tol = Tolerances::default();
        for class in [BoundClass::Unitary, BoundClass::DoublyStochastic, BoundClass::Commuting] {
            let p = trials::bound_polynomial(class, m, n, &mut trial_rng(seed, 9));
            let r = bound_check(&p, class, None, &tol).unwrap();
            let moduli: Vec<f64> = r.eigenvalues.iter().map(|z| z.norm()).collect();
            prop_assert!(moduli.iter().all(|&x| x < r.upper), "{class:?}: {moduli:?}");
            if let Some(lo) = r.lower {
                prop_assert!(moduli.iter().all(|&x| x > lo), "{class:?}: {moduli:?}");
            }
            prop_assert!(r.holds);
        }
    }

    #[test]
    fn guaranteed_classes_diagonalize(seed in seeds(), n in 1usize..4) {
        let tol = Tolerances::default();
        for class in trials::DiagClass::ALL {
            let p = trials::diag_polynomial(class, n, &mut trial_rng(seed, 10));
            let c = p.companion(&tol).unwrap().matrix;
            let d = qhw::qmat::diagonalize(&c, &tol).unwrap();
            let xinv = d.x.inverse(&tol).unwrap();
            let resid = (&(&(&xinv * &c) * &d.x) - &d.d()).frobenius_norm();
            prop_assert!(resid <= 1e-8 * (1.0 + c.frobenius_norm()), "{class:?}: {resid}");
        }
    }
}
