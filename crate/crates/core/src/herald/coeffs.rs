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

use crate::derivative::{gaussian_derivative_capped, DerivOrder, GaussianForm, Monomial};
use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::linalg::{factorial, sqrt_factorial, CMat, C64};

use super::quantities::{blocks_of, probability_parts, CoreQuantities};
use super::reduce::{block_partition, reduced_form, ReducedForm};
use super::HeraldPattern;

/// Index cap for derivatives evaluated inside the heralding engine. The
/// dynamic-programming table limit still applies.
pub const HERALD_INDEX_CAP: usize = 256;

/// `c_n / c_{n_T}` for `n = 0..=n_T`.
pub fn coefficient_ratios(pattern: &HeraldPattern, cq: &CoreQuantities) -> Result<Vec<C64>> {
    let n_t = pattern.total();
    if n_t == 0 {
        return Err(Error::Invalid("coefficient ratios need at least one detected photon".into()));
    }
    if let Some(j) = cq.degenerate {
        return Err(Error::KappaDegenerate(pattern.detected[j]));
    }
    let k = pattern.counts.len();
    let form = GaussianForm::new(cq.ratio_matrix(), cq.ratio_linear())?;
    let top = factorial(n_t);
    (0..=n_t)
        .map(|n| {
            let order = DerivOrder::new(pattern.counts.clone()).with_monomial(Monomial::unit(k, n_t, n));
            let v = gaussian_derivative_capped(&form, &order, HERALD_INDEX_CAP)?;
            Ok(v / (sqrt_factorial(n) * top * top.sqrt()))
        })
        .collect()
}

/// `T[m][n] = c_m c_n* / |c_{n_T}|²`-proportional products, valid even when
/// some `κ_j` vanish. The overall scale is arbitrary.
pub fn coefficient_products(pattern: &HeraldPattern, cq: &CoreQuantities) -> Result<CMat> {
    let n_t = pattern.total();
    let k = pattern.counts.len();
    let lin = cq.y.clone();
    let form = GaussianForm::new(cq.c.clone(), lin)?;
    let mut t = CMat::zeros(n_t + 1, n_t + 1);
    for m in 0..=n_t {
        for n in 0..=n_t {
            let mono = Monomial {
                omega_power: n,
                sigma_power: m,
                omega_weights: cq.kappa.iter().map(|z| z.conj()).collect(),
                sigma_weights: cq.kappa.clone(),
            };
            debug_assert_eq!(mono.sigma_weights.len(), k);
            let order = DerivOrder::new(pattern.counts.clone()).with_monomial(mono);
            t[(m, n)] = gaussian_derivative_capped(&form, &order, HERALD_INDEX_CAP)? / (sqrt_factorial(m) * sqrt_factorial(n));
        }
    }
    Ok(t)
}

/// Heralding probability from an already partitioned reduced form.
pub fn probability_from_blocks(rf: &ReducedForm, pattern: &HeraldPattern) -> Result<f64> {
    let bl = blocks_of(rf)?;
    let (pref, a_p, z_p) = probability_parts(bl)?;
    let form = GaussianForm::new(a_p, z_p)?;
    let v = gaussian_derivative_capped(&form, &DerivOrder::new(pattern.counts.clone()), HERALD_INDEX_CAP)?;
    let fact: f64 = pattern.counts.iter().map(|&c| factorial(c)).product();
    let p = rf.p0 * pref * v / fact;
    Ok(p.re.max(0.0))
}

/// Probability of observing `pattern` on the detected modes, any number of
/// modes left unmeasured.
pub fn herald_probability(state: &GaussianState, pattern: &HeraldPattern) -> Result<f64> {
    let rf = block_partition(&reduced_form(state)?, pattern)?;
    probability_from_blocks(&rf, pattern)
}
