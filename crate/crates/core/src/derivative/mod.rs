// Copyright 2026 The gaussherald Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Gaussian-moment derivatives.
//!
//! Every closed-form quantity of the heralding formulas reduces to
//!
//! ```text
//! ∏_k (∂²/∂σ_k ∂ω_k)^{n_k} [ exp(½ γᵀ M γ + vᵀ γ) · (Σ w_j ω_j)^m (Σ u_i σ_i)^n ] at γ = 0
//! ```
//!
//! with `γ = (σ_1 … σ_K, ω_1 … ω_K)`. Expanding the derivative pairs each
//! differentiated variable either with another one (weight `M_ij`) or with
//! itself (weight `v_i`), so the value is the loop hafnian of `M` expanded
//! by the derivative orders, with `v` on the diagonal. The monomial is
//! folded in by two auxiliary variables `t_ω`, `t_σ` whose only couplings
//! are the weights `w`, `u` and which are differentiated `m` and `n` times.
//!
//! The matching sum is evaluated by dynamic programming over the multiset
//! of remaining index copies: the first remaining copy is matched either to
//! its own loop or to one of the `c_j` interchangeable copies of index `j`.
//! The state space is `∏ (c_k + 1)`, which stays small for few distinct
//! indices even when the photon numbers are large. States are visited in
//! increasing mixed-radix order and partners in increasing index order, so
//! results are bitwise reproducible.

pub mod taylor;

use crate::error::{Error, Result};
use crate::linalg::{symmetry_error, CMat, CVec, C64, ONE, ZERO};

/// Default cap on the number of expanded indices for public entry points.
pub const DEFAULT_INDEX_CAP: usize = 24;

/// Hard limit on the dynamic-programming table.
pub const MAX_DP_STATES: usize = 1 << 24;

/// Quadratic-plus-linear exponent `½ γᵀ M γ + vᵀ γ` over `2K` variables,
/// laid out as all `σ` variables followed by all `ω` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianForm {
    pub mat: CMat,
    pub lin: CVec,
}

impl GaussianForm {
    pub fn new(mat: CMat, lin: CVec) -> Result<Self> {
        let dim = mat.nrows();
        if dim % 2 != 0 || mat.ncols() != dim || lin.len() != dim {
            return Err(Error::Invalid(format!("gaussian form of shape {}x{} / {}", mat.nrows(), mat.ncols(), lin.len())));
        }
        let sym = symmetry_error(&mat);
        if sym > 1e-10 {
            return Err(Error::Invalid(format!("quadratic form not symmetric ({sym:.3e})")));
        }
        Ok(GaussianForm { mat, lin })
    }

    /// Number of variable pairs `K`.
    pub fn pairs(&self) -> usize {
        self.mat.nrows() / 2
    }
}

/// Optional monomial `(Σ_j w_j ω_j)^m (Σ_i u_i σ_i)^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub omega_power: usize,
    pub sigma_power: usize,
    pub omega_weights: Vec<C64>,
    pub sigma_weights: Vec<C64>,
}

impl Monomial {
    /// Unit weights: `(Σ ω)^m (Σ σ)^n`.
    pub fn unit(pairs: usize, omega_power: usize, sigma_power: usize) -> Self {
        Monomial {
            omega_power,
            sigma_power,
            omega_weights: vec![ONE; pairs],
            sigma_weights: vec![ONE; pairs],
        }
    }
}

/// Differentiation orders `n_k` per variable pair plus an optional monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivOrder {
    pub orders: Vec<usize>,
    pub monomial: Option<Monomial>,
}

impl DerivOrder {
    pub fn new(orders: Vec<usize>) -> Self {
        DerivOrder { orders, monomial: None }
    }

    pub fn with_monomial(mut self, monomial: Monomial) -> Self {
        self.monomial = Some(monomial);
        self
    }

    pub fn total(&self) -> usize {
        self.orders.iter().sum()
    }

    /// Size of the expanded index multiset.
    pub fn expanded_size(&self) -> usize {
        2 * self.total() + self.monomial.as_ref().map_or(0, |m| m.omega_power + m.sigma_power)
    }
}

/// Evaluates the derivative with the default index cap.
pub fn gaussian_derivative(form: &GaussianForm, order: &DerivOrder) -> Result<C64> {
    gaussian_derivative_capped(form, order, DEFAULT_INDEX_CAP)
}

pub fn gaussian_derivative_capped(form: &GaussianForm, order: &DerivOrder, cap: usize) -> Result<C64> {
    let k = form.pairs();
    if order.orders.len() != k {
        return Err(Error::Invalid(format!("{} orders for {} variable pairs", order.orders.len(), k)));
    }
    let size = order.expanded_size();
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    let total = order.total();
    let mut counts: Vec<usize> = order.orders.iter().chain(order.orders.iter()).cloned().collect();
    let mut weights = form.mat.clone();
    let mut diag: Vec<C64> = form.lin.iter().cloned().collect();
    if let Some(mono) = &order.monomial {
        if mono.omega_power > total || mono.sigma_power > total {
            return Err(Error::Invalid(format!(
                "monomial powers ({}, {}) exceed derivative order {}",
                mono.omega_power, mono.sigma_power, total
            )));
        }
        if mono.omega_weights.len() != k || mono.sigma_weights.len() != k {
            return Err(Error::Invalid("monomial weight length mismatch".into()));
        }
        let dim = 2 * k + 2;
        let (t_omega, t_sigma) = (2 * k, 2 * k + 1);
        weights = weights.resize(dim, dim, ZERO);
        for j in 0..k {
            weights[(t_omega, k + j)] = mono.omega_weights[j];
            weights[(k + j, t_omega)] = mono.omega_weights[j];
            weights[(t_sigma, j)] = mono.sigma_weights[j];
            weights[(j, t_sigma)] = mono.sigma_weights[j];
        }
        diag.extend([ZERO, ZERO]);
        counts.extend([mono.omega_power, mono.sigma_power]);
    }
    multiset_loop_hafnian(&weights, &diag, &counts)
}

/// Loop hafnian of the matrix whose off-diagonal entries are `weights` and
/// whose diagonal is `diag`, with index `k` repeated `counts[k]` times.
pub fn multiset_loop_hafnian(weights: &CMat, diag: &[C64], counts: &[usize]) -> Result<C64> {
    // drop indices that never appear
    let active: Vec<usize> = (0..counts.len()).filter(|&i| counts[i] > 0).collect();
    let k = active.len();
    let c: Vec<usize> = active.iter().map(|&i| counts[i]).collect();
    let mut strides = vec![1usize; k + 1];
    for i in 0..k {
        strides[i + 1] = strides[i]
            .checked_mul(c[i] + 1)
            .filter(|&s| s <= MAX_DP_STATES)
            .ok_or(Error::TooLarge { size: c.iter().sum(), cap: MAX_DP_STATES })?;
    }
    let states = strides[k];
    let w = |a: usize, b: usize| weights[(active[a], active[b])];
    let d: Vec<C64> = active.iter().map(|&i| diag[i]).collect();

    let mut table = vec![ZERO; states];
    table[0] = ONE;
    let mut cur = vec![0usize; k];
    for idx in 1..states {
        // increment mixed-radix digits
        for (digit, value) in cur.iter_mut().enumerate() {
            if *value < c[digit] {
                *value += 1;
                break;
            }
            *value = 0;
        }
        let first = cur.iter().position(|&x| x > 0).expect("nonzero state");
        let rest = idx - strides[first];
        let mut acc = d[first] * table[rest];
        for j in first..k {
            let avail = if j == first { cur[j] - 1 } else { cur[j] };
            if avail > 0 {
                acc += w(first, j) * (avail as f64) * table[rest - strides[j]];
            }
        }
        table[idx] = acc;
    }
    Ok(table[states - 1])
}

/// Loop hafnian of a symmetric matrix: sum over perfect matchings of its
/// index set where fixed points contribute their diagonal entry.
pub fn loop_hafnian(mat: &CMat) -> Result<C64> {
    loop_hafnian_capped(mat, DEFAULT_INDEX_CAP)
}

pub fn loop_hafnian_capped(mat: &CMat, cap: usize) -> Result<C64> {
    let n = mat.nrows();
    if mat.ncols() != n {
        return Err(Error::Invalid("loop hafnian of a non-square matrix".into()));
    }
    if n > cap {
        return Err(Error::TooLarge { size: n, cap });
    }
    let diag: Vec<C64> = (0..n).map(|i| mat[(i, i)]).collect();
    multiset_loop_hafnian(mat, &diag, &vec![1; n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Exhaustive enumeration of matchings with loops.
    fn brute_lhaf(m: &CMat, rest: &[usize]) -> C64 {
        if rest.is_empty() {
            return ONE;
        }
        let i = rest[0];
        let tail = &rest[1..];
        let mut acc = m[(i, i)] * brute_lhaf(m, tail);
        for (pos, &j) in tail.iter().enumerate() {
            let mut rem = tail.to_vec();
            rem.remove(pos);
            acc += m[(i, j)] * brute_lhaf(m, &rem);
        }
        acc
    }

    #[test]
    fn empty_and_two_by_two() {
        assert_eq!(loop_hafnian(&CMat::zeros(0, 0)).unwrap(), ONE);
        let m = CMat::from_row_slice(2, 2, &[c(0.3, 0.1), c(-0.7, 0.2), c(-0.7, 0.2), c(1.1, -0.4)]);
        let expect = m[(0, 1)] + m[(0, 0)] * m[(1, 1)];
        assert!((loop_hafnian(&m).unwrap() - expect).norm() < 1e-15);
    }

    #[test]
    fn six_by_six_matches_enumeration() {
        let mut s = 7u64;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let a = CMat::from_fn(6, 6, |_, _| c(next(), next()));
        let m = &a + a.transpose();
        let idx: Vec<usize> = (0..6).collect();
        let expect = brute_lhaf(&m, &idx);
        assert!((loop_hafnian(&m).unwrap() - expect).norm() < 1e-12 * expect.norm().max(1.0));
    }

    #[test]
    fn repeated_indices_match_expanded_matrix() {
        let m = CMat::from_row_slice(2, 2, &[c(0.2, 0.1), c(0.5, -0.3), c(0.5, -0.3), c(-0.4, 0.2)]);
        let diag = [c(0.7, 0.0), c(0.1, 0.9)];
        let counts = [3usize, 2];
        let expanded: Vec<usize> = vec![0, 0, 0, 1, 1];
        let big = CMat::from_fn(5, 5, |i, j| if i == j { diag[expanded[i]] } else { m[(expanded[i], expanded[j])] });
        let idx: Vec<usize> = (0..5).collect();
        let expect = brute_lhaf(&big, &idx);
        let got = multiset_loop_hafnian(&m, &diag, &counts).unwrap();
        assert!((got - expect).norm() < 1e-13);
    }

    #[test]
    fn zero_order_is_one() {
        let f = GaussianForm::new(CMat::zeros(4, 4), CVec::zeros(4)).unwrap();
        assert_eq!(gaussian_derivative(&f, &DerivOrder::new(vec![0, 0])).unwrap(), ONE);
    }

    #[test]
    fn second_order_term() {
        let mat = CMat::from_row_slice(2, 2, &[c(0.3, 0.0), c(0.2, 0.5), c(0.2, 0.5), c(-0.1, 0.0)]);
        let lin = CVec::from_vec(vec![c(1.0, -1.0), c(0.5, 0.25)]);
        let f = GaussianForm::new(mat.clone(), lin.clone()).unwrap();
        let got = gaussian_derivative(&f, &DerivOrder::new(vec![1])).unwrap();
        assert!((got - (mat[(0, 1)] + lin[0] * lin[1])).norm() < 1e-15);
    }

    #[test]
    fn cap_is_enforced() {
        let f = GaussianForm::new(CMat::zeros(2, 2), CVec::zeros(2)).unwrap();
        let err = gaussian_derivative(&f, &DerivOrder::new(vec![13])).unwrap_err();
        assert_eq!(err, Error::TooLarge { size: 26, cap: 24 });
        assert!(gaussian_derivative_capped(&f, &DerivOrder::new(vec![13]), 64).is_ok());
    }

    #[test]
    fn monomial_only_counts_full_contractions() {
        // ∂σ^n ∂ω^n [(Σω)^n (Σσ)^n] = (n!)^2 for a single pair and zero form
        let f = GaussianForm::new(CMat::zeros(2, 2), CVec::zeros(2)).unwrap();
        let order = DerivOrder::new(vec![3]).with_monomial(Monomial::unit(1, 3, 3));
        assert!((gaussian_derivative(&f, &order).unwrap() - c(36.0, 0.0)).norm() < 1e-12);
    }
}
