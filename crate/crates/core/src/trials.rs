//! Randomized property suites. Trials run in parallel; each draws from its
//! own seeded stream, so a report depends only on `(trials, seed)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Tolerances;
use crate::error::Result;
use crate::hw::{hw_check, hw_type_check};
use crate::poly::{
    bound_check, companion_similarity_witness, diagonalizable_companion_linear,
    diagonalizable_companion_quadratic_unitary, standard_eigenvalues_poly, BoundClass, QMatrixPolynomial,
};
use crate::qmat::QMatrix;
use crate::sampling::{self, trial_rng};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<TrialFailure>,
    /// What `extreme` measures.
    pub metric: String,
    /// Worst value of the metric over passing trials.
    pub extreme: f64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

/// Outcome of one trial: a metric value, or a failure message.
type Outcome = std::result::Result<f64, String>;

fn run(
    name: &str,
    metric: &str,
    salt: u64,
    trials: usize,
    seed: u64,
    worst_is_max: bool,
    trial: impl Fn(u64, &mut rand_chacha::ChaCha8Rng) -> Outcome + Sync,
) -> SuiteReport {
    let outcomes: Vec<Outcome> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed ^ salt, i);
            trial(i, &mut rng)
        })
        .collect();
    let mut failures = Vec::new();
    let mut extreme = if worst_is_max { f64::NEG_INFINITY } else { f64::INFINITY };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok(v) if worst_is_max => extreme = extreme.max(v),
            Ok(v) => extreme = extreme.min(v),
            Err(message) => failures.push(TrialFailure { trial: i as u64, message }),
        }
    }
    SuiteReport {
        name: name.into(),
        trials,
        passed: trials - failures.len(),
        failures,
        metric: metric.into(),
        extreme,
    }
}

fn err<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Normal pairs of orders 2-8: the Frobenius bound holds.
pub fn hw_normal(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    run("hw-normal", "max lhs/rhs", 0x01, trials, seed, true, |i, rng| {
        let n = 2 + (i % 7) as usize;
        let (a, b) = if i % 2 == 0 {
            (sampling::normal_matrix(n, rng), sampling::normal_matrix(n, rng))
        } else {
            sampling::nearby_normal_pair(n, 0.05, rng)
        };
        let r = err(hw_check(&a, &b, tol))?;
        if !r.holds {
            return Err(format!("order {n}: lhs {} > rhs {}", r.lhs, r.rhs));
        }
        Ok(if r.rhs > 0.0 { r.lhs / r.rhs } else { 0.0 })
    })
}

/// Diagonalizable `A` and arbitrary `B`, orders 2-6: the weighted bound holds.
pub fn hw_diagonalizable(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    run("hw-diagonalizable", "max lhs/rhs", 0x02, trials, seed, true, |i, rng| {
        let n = 2 + (i % 5) as usize;
        let a = sampling::diagonalizable(n, rng);
        let g = sampling::ginibre(n, rng);
        let b = match i % 3 {
            0 => g,
            1 => &a + &g.scale(0.1),
            _ => &a + &g.scale(1e-4),
        };
        let r = err(hw_type_check(&a, &b, tol))?;
        if !r.holds {
            return Err(format!("order {n}: lhs {} > rhs {}", r.lhs, r.rhs));
        }
        Ok(if r.rhs > 0.0 { r.lhs / r.rhs } else { 0.0 })
    })
}

/// Random polynomials with `m, n <= 3`: the companion permutation similarity
/// is exact and both spectrum routes agree.
pub fn companion(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    run("companion-similarity", "max relative residual", 0x03, trials, seed, true, |i, rng| {
        let m = 1 + (i % 3) as usize;
        let n = 1 + ((i / 3) % 3) as usize;
        let p = sampling::polynomial(m, n, rng);
        let w = err(companion_similarity_witness(&p, tol))?;
        let scale = 1.0 + err(p.companion(tol))?.matrix.complex_adjoint().frobenius_norm();
        let rel = w.residual / scale;
        if rel > 1e-10 {
            return Err(format!("m {m}, n {n}: residual {:.3e}", w.residual));
        }
        let s = err(standard_eigenvalues_poly(&p, tol))?;
        if s.discrepancy > 1e-6 {
            return Err(format!("m {m}, n {n}: routes differ by {:.3e}", s.discrepancy));
        }
        Ok(rel)
    })
}

pub fn bound_polynomial(class: BoundClass, m: usize, n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> QMatrixPolynomial {
    match class {
        BoundClass::Unitary => sampling::unitary_polynomial(m, n, rng),
        BoundClass::DoublyStochastic => sampling::doubly_stochastic_polynomial(m, n, rng),
        BoundClass::Commuting => sampling::commuting_monic_polynomial(m, n, rng),
    }
}

/// Eigenvalue moduli lie strictly inside the class bounds; reports the
/// smallest margin.
pub fn bounds(class: BoundClass, trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let name = match class {
        BoundClass::Unitary => "bounds-unitary",
        BoundClass::DoublyStochastic => "bounds-doubly-stochastic",
        BoundClass::Commuting => "bounds-commuting",
    };
    run(name, "min margin", 0x10 + class as u64, trials, seed, false, move |i, rng| {
        let m = 1 + (i % 3) as usize;
        let n = 1 + ((i / 3) % 3) as usize;
        let p = bound_polynomial(class, m, n, rng);
        let r = err(bound_check(&p, class, None, tol))?;
        let margin = r.lower_margin.map_or(r.upper_margin, |l| l.min(r.upper_margin));
        if !r.holds {
            return Err(format!("m {m}, n {n}: moduli [{}, {}] outside bounds", r.min_modulus, r.max_modulus));
        }
        Ok(margin)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagClass {
    LinearUnitary,
    LinearDiagonal,
    LinearPsd,
    QuadraticCommutingUnitary,
}

impl DiagClass {
    pub const ALL: [DiagClass; 4] =
        [DiagClass::LinearUnitary, DiagClass::LinearDiagonal, DiagClass::LinearPsd, DiagClass::QuadraticCommutingUnitary];
}

pub fn diag_polynomial(class: DiagClass, n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> QMatrixPolynomial {
    let c = match class {
        DiagClass::LinearUnitary => vec![sampling::unitary(n, rng), sampling::unitary(n, rng)],
        DiagClass::LinearDiagonal => vec![sampling::diagonal(n, rng), sampling::diagonal(n, rng)],
        DiagClass::LinearPsd => {
            let rank = 1 + (n > 1) as usize * (n - 1) / 2;
            vec![sampling::positive_semidefinite(n, rank, rng), sampling::positive_definite(n, rng)]
        }
        DiagClass::QuadraticCommutingUnitary => {
            let mut u = sampling::commuting_unitaries(n, 2, rng);
            u.push(QMatrix::identity(n));
            u
        }
    };
    QMatrixPolynomial::new(c).expect("shapes agree")
}

/// Companions in the guaranteed classes diagonalize; reports the largest kappa.
pub fn diagonalizable_classes(class: DiagClass, trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let name = match class {
        DiagClass::LinearUnitary => "diag-linear-unitary",
        DiagClass::LinearDiagonal => "diag-linear-diagonal",
        DiagClass::LinearPsd => "diag-linear-psd",
        DiagClass::QuadraticCommutingUnitary => "diag-quadratic-commuting-unitary",
    };
    run(name, "max kappa", 0x20 + class as u64, trials, seed, true, move |i, rng| {
        let n = 1 + (i % 4) as usize;
        let p = diag_polynomial(class, n, rng);
        let d = match class {
            DiagClass::QuadraticCommutingUnitary => err(diagonalizable_companion_quadratic_unitary(&p, tol))?,
            _ => err(diagonalizable_companion_linear(&p, tol))?,
        };
        match d.kappa {
            Some(k) if d.diagonalizable => Ok(k),
            _ => Err(format!("n {n}: {}", d.failure.unwrap_or_else(|| "not diagonalizable".into()))),
        }
    })
}

/// Every suite at the given trial count.
pub fn all(trials: usize, seed: u64, tol: &Tolerances) -> Vec<SuiteReport> {
    let mut out = vec![
        hw_normal(trials, seed, tol),
        hw_diagonalizable(trials, seed, tol),
        companion(trials, seed, tol),
    ];
    for class in [BoundClass::Unitary, BoundClass::DoublyStochastic, BoundClass::Commuting] {
        out.push(bounds(class, trials, seed, tol));
    }
    for class in DiagClass::ALL {
        out.push(diagonalizable_classes(class, trials, seed, tol));
    }
    out
}
