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

//! Brute-force reference for [`super::gaussian_derivative`].
//!
//! Expands `exp(½ γᵀ M γ + vᵀ γ) · monomial` as a truncated multivariate
//! power series and reads off a single coefficient. The cost is
//! exponential in the number of variables, which is acceptable for the
//! small instances it is meant to check.

use super::{DerivOrder, GaussianForm};
use crate::error::{Error, Result};
use crate::linalg::{factorial, C64, ONE, ZERO};

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Dense polynomial truncated componentwise at `max_exp`.
struct Truncated {
    max_exp: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<C64>,
}

/// Sparse polynomial term: exponent vector and coefficient.
type Term = (Vec<usize>, C64);

impl Truncated {
    fn one(max_exp: Vec<usize>) -> Self {
        let mut strides = vec![1; max_exp.len() + 1];
        for i in 0..max_exp.len() {
            strides[i + 1] = strides[i] * (max_exp[i] + 1);
        }
        let mut coeffs = vec![ZERO; strides[max_exp.len()]];
        coeffs[0] = ONE;
        Truncated { max_exp, strides, coeffs }
    }

    fn digits(&self, mut idx: usize) -> Vec<usize> {
        self.max_exp
            .iter()
            .map(|&e| {
                let d = idx % (e + 1);
                idx /= e + 1;
                d
            })
            .collect()
    }

    fn mul_sparse(&self, terms: &[Term]) -> Truncated {
        let mut out = vec![ZERO; self.coeffs.len()];
        for (idx, &a) in self.coeffs.iter().enumerate() {
            if a == ZERO {
                continue;
            }
            let d = self.digits(idx);
            'term: for (exps, coeff) in terms {
                let mut target = idx;
                for (i, &t) in exps.iter().enumerate() {
                    if t == 0 {
                        continue;
                    }
                    if d[i] + t > self.max_exp[i] {
                        continue 'term;
                    }
                    target += t * self.strides[i];
                }
                out[target] += a * coeff;
            }
        }
        Truncated { max_exp: self.max_exp.clone(), strides: self.strides.clone(), coeffs: out }
    }

    fn add_scaled(&mut self, other: &Truncated, scale: f64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * scale;
        }
    }
}

fn unit(dim: usize, i: usize, power: usize) -> Vec<usize> {
    let mut e = vec![0; dim];
    e[i] += power;
    e
}

/// Same quantity as [`super::gaussian_derivative`], from the power series.
pub fn taylor_oracle(form: &GaussianForm, order: &DerivOrder) -> Result<C64> {
    taylor_oracle_capped(form, order, DEFAULT_ORACLE_CAP)
}

pub fn taylor_oracle_capped(form: &GaussianForm, order: &DerivOrder, cap: usize) -> Result<C64> {
    let k = form.pairs();
    if order.orders.len() != k {
        return Err(Error::Invalid(format!("{} orders for {} variable pairs", order.orders.len(), k)));
    }
    let size = order.expanded_size();
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    let dim = 2 * k;
    let max_exp: Vec<usize> = order.orders.iter().chain(order.orders.iter()).cloned().collect();

    let mut quad: Vec<Term> = Vec::new();
    for i in 0..dim {
        quad.push((unit(dim, i, 1), form.lin[i]));
        quad.push((unit(dim, i, 2), form.mat[(i, i)] * 0.5));
        for j in (i + 1)..dim {
            let mut e = unit(dim, i, 1);
            e[j] += 1;
            quad.push((e, form.mat[(i, j)]));
        }
    }

    let degree: usize = max_exp.iter().sum();
    let mut series = Truncated::one(max_exp.clone());
    let mut power = Truncated::one(max_exp.clone());
    for j in 1..=degree {
        power = power.mul_sparse(&quad);
        series.add_scaled(&power, 1.0 / factorial(j));
    }

    if let Some(mono) = &order.monomial {
        let omega: Vec<Term> = (0..k).map(|j| (unit(dim, k + j, 1), mono.omega_weights[j])).collect();
        let sigma: Vec<Term> = (0..k).map(|j| (unit(dim, j, 1), mono.sigma_weights[j])).collect();
        for _ in 0..mono.omega_power {
            series = series.mul_sparse(&omega);
        }
        for _ in 0..mono.sigma_power {
            series = series.mul_sparse(&sigma);
        }
    }

    let top = *series.coeffs.last().expect("non-empty series");
    let scale: f64 = max_exp.iter().map(|&e| factorial(e)).product();
    Ok(top * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivative::{gaussian_derivative, Monomial};
    use crate::linalg::{CMat, CVec};

    #[test]
    fn trivial_cases() {
        let mat = CMat::from_row_slice(2, 2, &[C64::new(0.3, 0.0), C64::new(0.2, 0.5), C64::new(0.2, 0.5), C64::new(-0.1, 0.0)]);
        let lin = CVec::from_vec(vec![C64::new(1.0, -1.0), C64::new(0.5, 0.25)]);
        let f = GaussianForm::new(mat.clone(), lin.clone()).unwrap();
        assert_eq!(taylor_oracle(&f, &DerivOrder::new(vec![0])).unwrap(), ONE);
        let v = taylor_oracle(&f, &DerivOrder::new(vec![1])).unwrap();
        assert!((v - (mat[(0, 1)] + lin[0] * lin[1])).norm() < 1e-15);
    }

    #[test]
    fn agrees_with_kernel_on_fixed_instance() {
        let k = 3;
        let mat = CMat::from_fn(6, 6, |i, j| C64::new(0.1 * (i + j) as f64 - 0.3, 0.05 * (i * j) as f64 - 0.2));
        let mat = (&mat + mat.transpose()) * C64::new(0.5, 0.0);
        let lin = CVec::from_fn(6, |i, _| C64::new(0.3 - 0.1 * i as f64, 0.2));
        let f = GaussianForm::new(mat, lin).unwrap();
        for order in [
            DerivOrder::new(vec![2, 1, 1]),
            DerivOrder::new(vec![2, 1, 1]).with_monomial(Monomial::unit(k, 2, 3)),
        ] {
            let a = gaussian_derivative(&f, &order).unwrap();
            let b = taylor_oracle_capped(&f, &order, 16).unwrap();
            assert!((a - b).norm() <= 1e-10 * b.norm().max(1e-300), "{a} vs {b}");
        }
    }
}
