use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum-cost matching between two spectra under squared distance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssignmentResult {
    /// `permutation[i] = j` matches `lambda[i]` with `mu[j]` (0-based).
    pub permutation: Vec<usize>,
    /// `sum_i |lambda_i - mu_{pi(i)}|^2`, summed in index order.
    pub cost: f64,
    /// `cost_matrix[i][j] = |lambda_i - mu_j|^2`.
    pub cost_matrix: Vec<Vec<f64>>,
}

pub fn cost_matrix(lambda: &[Complex64], mu: &[Complex64]) -> Vec<Vec<f64>> {
    lambda.iter().map(|l| mu.iter().map(|m| (l - m).norm_sqr()).collect()).collect()
}

pub fn permutation_cost(cost: &[Vec<f64>], perm: &[usize]) -> f64 {
    perm.iter().enumerate().map(|(i, &j)| cost[i][j]).sum()
}

/// Hungarian method with row/column potentials. Returns the assignment and
/// the potentials `(u, v)` with `c[i][j] - u[i] - v[j] >= 0`.
fn hungarian(c: &[Vec<f64>]) -> (Vec<usize>, Vec<f64>, Vec<f64>) {
    let n = c.len();
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    // p[j]: row matched to column j (1-based, 0 = none)
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[p[j] - 1] = j - 1;
    }
    (perm, u[1..].to_vec(), v[1..].to_vec())
}

/// Kuhn augmenting path over allowed edges.
fn augment(row: usize, allowed: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for j in 0..allowed[row].len() {
        if allowed[row][j] && !seen[j] {
            seen[j] = true;
            if owner[j].is_none_or(|r| augment(r, allowed, seen, owner)) {
                owner[j] = Some(row);
                return true;
            }
        }
    }
    false
}

fn has_perfect_matching(allowed: &[Vec<bool>]) -> bool {
    let n = allowed.len();
    let mut owner = vec![None; n];
    (0..n).all(|r| augment(r, allowed, &mut vec![false; n], &mut owner))
}

/// Lexicographically smallest perfect matching within the tight edges.
fn lex_smallest(mut allowed: Vec<Vec<bool>>) -> Option<Vec<usize>> {
    let n = allowed.len();
    let mut perm = Vec::with_capacity(n);
    for i in 0..n {
        let row = allowed[i].clone();
        let mut fixed = false;
        for j in (0..n).filter(|&j| row[j]) {
            let mut trial = allowed.clone();
            trial[i] = (0..n).map(|k| k == j).collect();
            for r in trial.iter_mut().skip(i + 1) {
                r[j] = false;
            }
            if has_perfect_matching(&trial) {
                allowed = trial;
                perm.push(j);
                fixed = true;
                break;
            }
        }
        if !fixed {
            return None;
        }
    }
    Some(perm)
}

/// Global minimizer of `sum |lambda_i - mu_{pi(i)}|^2`; among minimizers the
/// lexicographically smallest permutation is returned.
pub fn min_cost_assignment(lambda: &[Complex64], mu: &[Complex64]) -> Result<AssignmentResult> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch(lambda.len(), mu.len()));
    }
    if lambda.is_empty() {
        return Err(Error::ShapeMismatch("empty spectra".into()));
    }
    if lambda.iter().chain(mu).any(|z| !z.is_finite()) {
        return Err(Error::NonFinite);
    }
    let c = cost_matrix(lambda, mu);
    let n = c.len();
    let (raw, u, v) = hungarian(&c);
    let scale = c.iter().flatten().fold(1.0f64, |m, &x| m.max(x));
    let slack = 64.0 * f64::EPSILON * scale * n as f64;
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| c[i][j] - u[i] - v[j] <= slack).collect())
        .collect();
    let permutation = match lex_smallest(tight) {
        Some(p) if permutation_cost(&c, &p) <= permutation_cost(&c, &raw) + slack => p,
        _ => raw,
    };
    let cost = permutation_cost(&c, &permutation);
    Ok(AssignmentResult { permutation, cost, cost_matrix: c })
}
