//! Random instance generators for property trials.
//!
//! Every generator draws from a caller-supplied RNG; [`trial_rng`] derives
//! an independent, reproducible stream for each trial index.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::clinalg::CMatrix;
use crate::poly::QMatrixPolynomial;
use crate::qmat::QMatrix;
use crate::quat::Quaternion;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// RNG for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index)))
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng))
}

pub fn unit_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

pub fn complex_ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| Complex64::new(normal(rng), normal(rng)))
}

/// Independent standard normal components.
pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    QMatrix::from_fn(n, n, |_, _| quaternion(rng))
}

/// `sum_i conj(u_i) v_i`.
fn inner(u: &[Quaternion], v: &[Quaternion]) -> Quaternion {
    u.iter().zip(v).fold(Quaternion::ZERO, |acc, (a, b)| acc + a.conj() * *b)
}

/// Haar-like unitary: orthonormalized Ginibre columns.
pub fn unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    orthonormalize(&ginibre(n, rng))
}

/// Gram-Schmidt (run twice) on the columns of a nonsingular matrix.
pub fn orthonormalize(g: &QMatrix) -> QMatrix {
    let n = g.rows();
    let mut cols: Vec<Vec<Quaternion>> = (0..n).map(|j| (0..n).map(|i| g[(i, j)]).collect()).collect();
    for k in 0..n {
        for _ in 0..2 {
            for j in 0..k {
                let c = inner(&cols[j], &cols[k]);
                let proj: Vec<Quaternion> = cols[j].iter().map(|u| *u * c).collect();
                for (x, p) in cols[k].iter_mut().zip(proj) {
                    *x -= p;
                }
            }
        }
        let norm = cols[k].iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[k].iter_mut() {
            *x = *x / norm;
        }
    }
    QMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub fn hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    let g = ginibre(n, rng);
    (&g + &g.conj_transpose()).scale(0.5)
}

/// `G G*`, positive definite with probability one.
pub fn positive_definite<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    let g = ginibre(n, rng);
    &g * &g.conj_transpose()
}

/// `G G*` with `G` of size `n x rank`.
pub fn positive_semidefinite<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> QMatrix {
    let g = QMatrix::from_fn(n, rank, |_, _| quaternion(rng));
    &g * &g.conj_transpose()
}

/// `U diag(d) U*` with complex Gaussian `d`.
pub fn normal_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    let u = unitary(n, rng);
    let d: Vec<Quaternion> = (0..n).map(|_| Quaternion::new(normal(rng), normal(rng), 0.0, 0.0)).collect();
    &(&u * &QMatrix::diag(&d)) * &u.conj_transpose()
}

/// Normal `A = U diag(d) U*` and `B = W diag(d + t e) W*`, where `W` is
/// `U + t G` re-orthonormalized.
pub fn nearby_normal_pair<R: Rng + ?Sized>(n: usize, t: f64, rng: &mut R) -> (QMatrix, QMatrix) {
    let u = unitary(n, rng);
    let w = orthonormalize(&(&u + &ginibre(n, rng).scale(t)));
    let d: Vec<Quaternion> = (0..n).map(|_| Quaternion::new(normal(rng), normal(rng), 0.0, 0.0)).collect();
    let e: Vec<Quaternion> = d.iter().map(|z| *z + Quaternion::new(normal(rng), normal(rng), 0.0, 0.0) * t).collect();
    let a = &(&u * &QMatrix::diag(&d)) * &u.conj_transpose();
    let b = &(&w * &QMatrix::diag(&e)) * &w.conj_transpose();
    (a, b)
}

/// `X diag(d) X^-1` with `X = I + G / (2 sqrt(n))`, which keeps `kappa(X)` moderate.
pub fn diagonalizable<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    let tol = crate::config::Tolerances::default();
    loop {
        let x = &QMatrix::identity(n) + &ginibre(n, rng).scale(0.5 / (n as f64).sqrt());
        let Ok(xinv) = x.inverse(&tol) else { continue };
        let d: Vec<Quaternion> = (0..n).map(|_| Quaternion::new(normal(rng), normal(rng).abs(), 0.0, 0.0)).collect();
        return &(&x * &QMatrix::diag(&d)) * &xinv;
    }
}

pub fn diagonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QMatrix {
    QMatrix::diag(&(0..n).map(|_| quaternion(rng)).collect::<Vec<_>>())
}

pub fn permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn permutation_matrix(p: &[usize]) -> QMatrix {
    let n = p.len();
    QMatrix::from_fn(n, n, |i, j| if p[i] == j { Quaternion::ONE } else { Quaternion::ZERO })
}

/// Convex combination of `k` random permutation matrices.
pub fn doubly_stochastic<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> QMatrix {
    let weights: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut acc = QMatrix::zeros(n, n);
    for w in weights {
        acc = &acc + &permutation_matrix(&permutation(n, rng)).scale(w / total);
    }
    acc
}

/// `V diag(d_k) V*` for each list of unit complex `d_k`, sharing one unitary `V`.
pub fn commuting_unitaries<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Vec<QMatrix> {
    let v = unitary(n, rng);
    let vh = v.conj_transpose();
    (0..count)
        .map(|_| {
            let d: Vec<Quaternion> = (0..n).map(|_| unit_complex(rng).into()).collect();
            &(&v * &QMatrix::diag(&d)) * &vh
        })
        .collect()
}

/// Real polynomials of degree `< n` in one Ginibre matrix; they commute.
pub fn commuting_family<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Vec<QMatrix> {
    let m = ginibre(n, rng).scale(1.0 / (2.0 * n as f64).sqrt());
    let mut powers = vec![QMatrix::identity(n)];
    for k in 1..n.max(2) {
        powers.push(&powers[k - 1] * &m);
    }
    (0..count)
        .map(|_| {
            powers.iter().fold(QMatrix::zeros(n, n), |acc, p| &acc + &p.scale(normal(rng) * 0.5))
        })
        .collect()
}

/// Ginibre coefficients with leading coefficient `I + G / (2 sqrt(n))`.
pub fn polynomial<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> QMatrixPolynomial {
    let mut c: Vec<QMatrix> = (0..m).map(|_| ginibre(n, rng)).collect();
    c.push(&QMatrix::identity(n) + &ginibre(n, rng).scale(0.5 / (n as f64).sqrt()));
    QMatrixPolynomial::new(c).expect("shapes agree")
}

pub fn unitary_polynomial<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> QMatrixPolynomial {
    QMatrixPolynomial::new((0..=m).map(|_| unitary(n, rng)).collect()).expect("shapes agree")
}

/// Permutation `A_m`, `A_0`; doubly stochastic in between.
pub fn doubly_stochastic_polynomial<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> QMatrixPolynomial {
    let mut c = vec![permutation_matrix(&permutation(n, rng))];
    for _ in 1..m {
        let k = rng.random_range(1..=n + 1);
        c.push(doubly_stochastic(n, k, rng));
    }
    c.push(permutation_matrix(&permutation(n, rng)));
    QMatrixPolynomial::new(c).expect("shapes agree")
}

pub fn commuting_monic_polynomial<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> QMatrixPolynomial {
    let mut c = commuting_family(n, m, rng);
    c.push(QMatrix::identity(n));
    QMatrixPolynomial::new(c).expect("shapes agree")
}
