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

//! Wigner function of a heralded single-mode state.
//!
//! Values are in the `α`-plane convention `W(α) = (2/π) Σ_k (−1)^k |⟨k|D(−α)ψ⟩|²`,
//! normalised as `∫ W d²α = 1` so the vacuum peaks at `2/π`. Grids are
//! reported over quadratures `x = √2 Re α`, `p = √2 Im α`, where the
//! density is `W(α)/2` and the vacuum peaks at `1/π`.

use std::f64::consts::PI;

use crate::derivative::{gaussian_derivative_capped, DerivOrder, GaussianForm};
use crate::error::Result;
use crate::gaussian::GaussianState;
use crate::linalg::{guarded_inverse, CVec, C64};

use super::coeffs::HERALD_INDEX_CAP;
use super::quantities::{blocks_of, core_quantities, gate_params};
use super::reduce::{block_partition, reduced_form};
use super::{gate_vector, HeraldPattern, HeraldedState};

/// Evaluates the Wigner function of `hs` at each phase-space point `α`.
pub fn wigner_eval(hs: &HeraldedState, points: &[C64]) -> Vec<f64> {
    let r = hs.zeta.norm();
    points
        .iter()
        .map(|&alpha| {
            // D(−α) D(β) equals D(β − α) up to a phase
            let shift = hs.beta - alpha;
            let mut cutoff = hs.n_max + 30 + (4.0 * (shift.norm_sqr() + r.sinh().powi(2) * (hs.n_max + 1) as f64)) as usize;
            loop {
                let v = gate_vector(&hs.coeffs, hs.zeta, shift, cutoff);
                let captured: f64 = v.iter().map(|z| z.norm_sqr()).sum();
                if captured > 1.0 - 1e-14 || cutoff > 4000 {
                    let s: f64 = v.iter().enumerate().map(|(k, z)| if k % 2 == 0 { z.norm_sqr() } else { -z.norm_sqr() }).sum();
                    return 2.0 / PI * s;
                }
                cutoff *= 2;
            }
        })
        .collect()
}

/// Wigner function straight from the Gaussian blocks, without forming
/// the number-basis state. The expression is known up to a constant, which
/// is fixed by integrating it numerically.
pub fn wigner_closed_form(state: &GaussianState, pattern: &HeraldPattern, points: &[C64]) -> Result<Vec<f64>> {
    let rf = block_partition(&reduced_form(state)?, pattern)?;
    let bl = blocks_of(&rf)?;
    let b11 = bl.r_hh[(0, 0)];
    let gp = gate_params(&rf, b11)?;
    let cq = core_quantities(&rf, &gp)?;
    let s_inv = guarded_inverse(&gp.s, "S")?;
    let env = guarded_inverse(&(&gp.s * gp.s.adjoint()), "S S†")?;
    let form_mat = cq.a.clone();
    let coupling = &bl.r_dh * &s_inv * C64::new(2.0 / (1.0 - b11.norm_sqr()).sqrt(), 0.0);
    let order = DerivOrder::new(pattern.counts.clone());

    let raw = |alpha: C64| -> Result<f64> {
        let dv = CVec::from_vec(vec![alpha.conj() - gp.d[0], alpha - gp.d[1]]);
        let e = -(dv.adjoint() * &env * &dv)[(0, 0)];
        let z = &cq.y + &coupling * &dv;
        let form = GaussianForm::new(form_mat.clone(), z)?;
        let v = gaussian_derivative_capped(&form, &order, HERALD_INDEX_CAP)?;
        Ok((e.exp() * v).re)
    };

    // trapezoid rule around β, fine enough for the narrowest quadrature
    let r = gp.zeta.norm();
    let n_t = pattern.total() as f64;
    let half = (6.0 + 2.0 * (n_t + 1.0).sqrt()) * r.exp();
    let h = 0.25 * (-r).exp();
    let steps = (2.0 * half / h).ceil() as i64;
    let mut total = 0.0;
    for i in 0..=steps {
        for j in 0..=steps {
            let a = gp.beta + C64::new(-half + i as f64 * h, -half + j as f64 * h);
            total += raw(a)?;
        }
    }
    let norm = total * h * h;
    points.iter().map(|&a| Ok(raw(a)? / norm)).collect()
}

/// Wigner values on a rectangular quadrature grid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct WignerGrid {
    pub xs: Vec<f64>,
    pub ps: Vec<f64>,
    /// `values[i][j]` at `(xs[i], ps[j])`, quadrature density.
    pub values: Vec<Vec<f64>>,
}

pub fn wigner_grid(hs: &HeraldedState, x_range: (f64, f64), p_range: (f64, f64), steps: usize) -> WignerGrid {
    let lin = |(lo, hi): (f64, f64)| -> Vec<f64> {
        if steps <= 1 {
            return vec![lo];
        }
        (0..steps).map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64).collect()
    };
    let xs = lin(x_range);
    let ps = lin(p_range);
    let sq = 2f64.sqrt();
    let values = xs
        .iter()
        .map(|&x| {
            let pts: Vec<C64> = ps.iter().map(|&p| C64::new(x / sq, p / sq)).collect();
            wigner_eval(hs, &pts).into_iter().map(|w| 0.5 * w).collect()
        })
        .collect();
    WignerGrid { xs, ps, values }
}
