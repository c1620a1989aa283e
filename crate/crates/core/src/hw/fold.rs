//! Folding a matching of conjugate-doubled spectra into matchings of the
//! standard spectra.
//!
//! Given `mu` and `delta` in the upper half plane and a permutation `sigma` of
//! `0..2n` matching `(mu, conj mu)` to `(delta, conj delta)`, replace every
//! target by its representative `gamma_i = delta_{sigma(i) mod n}`. Row `i`
//! then carries the two targets `gamma_i` and `gamma_{n+i}`. The rows are
//! split into two sums by swapping targets within rows until the first sum
//! uses every `delta` exactly once; the second one then does too.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fold {
    /// The cheaper of the two permutations.
    pub sigma1: Vec<usize>,
    pub sigma2: Vec<usize>,
    pub cost1: f64,
    pub cost2: f64,
    /// `sum_i |mu2n_i - delta2n_{sigma(i)}|^2` for the input permutation.
    pub input_cost: f64,
}

/// `(z_1..z_n, conj z_1..conj z_n)`.
pub fn conjugate_doubled(z: &[Complex64]) -> Vec<Complex64> {
    z.iter().copied().chain(z.iter().map(|w| w.conj())).collect()
}

fn cost(mu: &[Complex64], delta: &[Complex64], perm: &[usize]) -> f64 {
    perm.iter().enumerate().map(|(i, &j)| (mu[i] - delta[j]).norm_sqr()).sum()
}

pub fn fold_conjugate_assignment(mu: &[Complex64], delta: &[Complex64], sigma: &[usize]) -> Result<Fold> {
    let n = mu.len();
    if delta.len() != n {
        return Err(Error::LengthMismatch(n, delta.len()));
    }
    if sigma.len() != 2 * n {
        return Err(Error::MalformedPairing(format!("expected a permutation of {} indices, got {}", 2 * n, sigma.len())));
    }
    let mut count = vec![0usize; n];
    let mut seen = vec![false; 2 * n];
    for &s in sigma {
        if s >= 2 * n || seen[s] {
            return Err(Error::MalformedPairing(format!("index {s} is out of range or repeated")));
        }
        seen[s] = true;
        count[s % n] += 1;
    }
    if let Some(d) = count.iter().position(|&c| c != 2) {
        return Err(Error::MalformedPairing(format!("delta {d} occurs {} times", count[d])));
    }

    let gamma: Vec<usize> = sigma.iter().map(|&s| s % n).collect();
    let mut s1: Vec<usize> = gamma[..n].to_vec();
    let mut s2: Vec<usize> = gamma[n..].to_vec();
    for k in 0..n {
        if !s1[..k].contains(&s1[k]) {
            continue;
        }
        std::mem::swap(&mut s1[k], &mut s2[k]);
        let mut last = k;
        let mut guard = 0;
        while let Some(r) = (0..=k).find(|&r| r != last && s1[r] == s1[last]) {
            std::mem::swap(&mut s1[r], &mut s2[r]);
            last = r;
            guard += 1;
            if guard > k + 1 {
                return Err(Error::MalformedPairing("swap chain did not terminate".into()));
            }
        }
    }

    let mu2 = conjugate_doubled(mu);
    let delta2 = conjugate_doubled(delta);
    let input_cost = cost(&mu2, &delta2, sigma);
    let (c1, c2) = (cost(mu, delta, &s1), cost(mu, delta, &s2));
    let fold = if c1 <= c2 {
        Fold { sigma1: s1, sigma2: s2, cost1: c1, cost2: c2, input_cost }
    } else {
        Fold { sigma1: s2, sigma2: s1, cost1: c2, cost2: c1, input_cost }
    };
    Ok(fold)
}
