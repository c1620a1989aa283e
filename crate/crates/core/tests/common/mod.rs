//! Strategies and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use qhw::clinalg::CMatrix;
use qhw::qmat::QMatrix;
use qhw::Quaternion;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-3.0..3.0f64).prop_map(Quaternion::from)
}

pub fn qmatrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(quaternion(), n * n).prop_map(move |v| QMatrix::from_vec(n, n, v).unwrap())
}

pub fn sized_qmatrix(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max).prop_flat_map(qmatrix)
}

pub fn qmatrix_pair(max: usize) -> impl Strategy<Value = (QMatrix, QMatrix)> {
    (1..=max).prop_flat_map(|n| (qmatrix(n), qmatrix(n)))
}

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b)| c(a, b))
}

pub fn spectra(max: usize) -> impl Strategy<Value = (Vec<Complex64>, Vec<Complex64>)> {
    (1..=max).prop_flat_map(|n| (prop::collection::vec(complex(), n), prop::collection::vec(complex(), n)))
}

/// Hamilton product from the table of basis products `e_a e_b = s e_c`.
pub fn table_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    // (sign, index) of e_a * e_b with e = [1, i, j, k]
    const T: [[(f64, usize); 4]; 4] = [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];
    let (a, b): ([f64; 4], [f64; 4]) = (p.into(), q.into());
    let mut out = [0.0; 4];
    for x in 0..4 {
        for y in 0..4 {
            let (s, k) = T[x][y];
            out[k] += s * a[x] * b[y];
        }
    }
    out.into()
}

/// `[[A1, A2], [-conj A2, conj A1]]` assembled entry by entry.
pub fn adjoint_oracle(a: &QMatrix) -> CMatrix {
    let (n, m) = (a.rows(), a.cols());
    let mut out = CMatrix::zeros(2 * n, 2 * m);
    for i in 0..n {
        for j in 0..m {
            let [a0, a1, a2, a3]: [f64; 4] = a[(i, j)].into();
            let z1 = c(a0, a1);
            let z2 = c(a2, a3);
            out[(i, j)] = z1;
            out[(i, j + m)] = z2;
            out[(i + n, j)] = -z2.conj();
            out[(i + n, j + m)] = z1.conj();
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum of `sum |l_i - m_p(i)|^2` over all permutations, summed in index order.
pub fn exhaustive_min(l: &[Complex64], m: &[Complex64]) -> f64 {
    permutations(l.len())
        .iter()
        .map(|p| p.iter().enumerate().map(|(i, &j)| (l[i] - m[j]).norm_sqr()).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
}

/// Multiset distance for short lists: exhaustive matching, square-rooted.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    if a.len() <= 8 {
        return exhaustive_min(a, b).sqrt();
    }
    // greedy fallback for longer lists; an upper bound on the optimum
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in a {
        let (k, d) = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, y)| (k, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[k] = true;
        worst = worst.max(d);
    }
    worst
}

pub fn cmat_frobenius(a: &CMatrix) -> f64 {
    a.as_slice().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn qmat_frobenius_sq(a: &QMatrix) -> f64 {
    a.entries().iter().map(|q| q.norm_sqr()).sum()
}
