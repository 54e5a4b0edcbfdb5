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

//! Heralded non-Gaussian states in closed form.
//!
//! Measuring photon numbers `n̄` on all but one mode of a pure Gaussian
//! state leaves that mode in `D(β) S(ζ) Σ_{n ≤ n_T} c_n |n⟩` with
//! `n_T = Σ n̄`. The gate parameters, the probability and the ratios
//! `c_n / c_{n_T}` all follow from the blocks of `R̃` and `ỹ` through
//! [`crate::derivative::gaussian_derivative`].
//!
//! When a detected mode is decoupled from the output (`κ_j ≈ 0`) the ratio
//! formula breaks down and [`herald`] switches to the number-basis path.

mod coeffs;
mod quantities;
mod reduce;
mod wigner;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{conditional_amplitudes, gate_vector, strip_vector};
use crate::gaussian::{CircuitParams, GaussianState, KetForm};
use crate::linalg::{C64, ZERO};

pub use coeffs::{coefficient_products, coefficient_ratios, herald_probability, probability_from_blocks, HERALD_INDEX_CAP};
pub use quantities::{core_quantities, gate_params, CoreQuantities, GateParams, B11_LIMIT, KAPPA_TOL};
pub use reduce::{block_partition, reduced_form, reduced_form_from_ket, Blocks, ReducedForm};
pub use wigner::{wigner_closed_form, wigner_eval, wigner_grid, WignerGrid};

/// Photon counts `counts[i]` on modes `detected[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeraldPattern {
    pub detected: Vec<usize>,
    pub counts: Vec<usize>,
}

impl HeraldPattern {
    pub fn new(detected: Vec<usize>, counts: Vec<usize>) -> Result<Self> {
        let p = HeraldPattern { detected, counts };
        p.check_shape()?;
        Ok(p)
    }

    fn check_shape(&self) -> Result<()> {
        if self.detected.len() != self.counts.len() {
            return Err(Error::Invalid(format!(
                "{} detected modes but {} counts",
                self.detected.len(),
                self.counts.len()
            )));
        }
        let mut seen = self.detected.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.detected.len() {
            return Err(Error::Invalid("detected modes repeat".into()));
        }
        Ok(())
    }

    pub fn validate_for(&self, num_modes: usize) -> Result<()> {
        self.check_shape()?;
        if let Some(&m) = self.detected.iter().find(|&&m| m >= num_modes) {
            return Err(Error::Invalid(format!("detected mode {m} out of range for {num_modes} modes")));
        }
        Ok(())
    }

    /// `n_T`.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Unmeasured modes in increasing order.
    pub fn heralded_modes(&self, num_modes: usize) -> Vec<usize> {
        (0..num_modes).filter(|m| !self.detected.contains(m)).collect()
    }
}

/// Which route produced the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeraldPath {
    ClosedForm,
    Fock,
}

/// `D(β) S(ζ) Σ_{n ≤ n_max} c_n |n⟩` on `output_mode`, with the heralding
/// probability. Coefficients are normalised and the first non-negligible
/// one is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct HeraldedState {
    pub output_mode: usize,
    pub zeta: C64,
    pub beta: C64,
    pub coeffs: Vec<C64>,
    pub n_max: usize,
    pub probability: f64,
    pub path: HeraldPath,
}

impl HeraldedState {
    /// Number-basis amplitudes `⟨m|ψ⟩` for `m < cutoff`.
    pub fn fock_amplitudes(&self, cutoff: usize) -> Vec<C64> {
        gate_vector(&self.coeffs, self.zeta, self.beta, cutoff)
    }

    /// Mean photon number of the output mode.
    pub fn mean_photons(&self) -> f64 {
        let cut = self.suggested_cutoff();
        self.fock_amplitudes(cut).iter().enumerate().map(|(m, z)| m as f64 * z.norm_sqr()).sum()
    }

    /// A cutoff that captures the state to well below `1e-12`.
    pub fn suggested_cutoff(&self) -> usize {
        let r = self.zeta.norm();
        let spread = self.beta.norm_sqr() + r.sinh().powi(2) * (2 * self.n_max + 1) as f64;
        self.n_max + 40 + (12.0 * spread) as usize + (6.0 * r.exp()) as usize * (self.n_max + 1)
    }
}

/// Coefficient magnitude below which trailing entries are dropped.
const COEFF_TRIM: f64 = 1e-12;

/// Tail tolerance of the number-basis fallback.
const FALLBACK_TAIL: f64 = 1e-12;

/// Heralds the single unmeasured mode of a pure Gaussian state.
pub fn herald(state: &GaussianState, pattern: &HeraldPattern) -> Result<HeraldedState> {
    pattern.validate_for(state.num_modes())?;
    if !state.is_pure() {
        return Err(Error::Unsupported("heralding a mixed Gaussian state".into()));
    }
    let rf = block_partition(&reduced_form(state)?, pattern)?;
    herald_reduced(&rf, pattern, || KetForm::from_state(state))
}

/// Same as [`herald`], working from the circuit's ket form.
pub fn herald_circuit(params: &CircuitParams, pattern: &HeraldPattern) -> Result<HeraldedState> {
    let ket = params.ket_form()?;
    pattern.validate_for(params.num_modes())?;
    let rf = block_partition(&reduced_form_from_ket(&ket), pattern)?;
    herald_reduced(&rf, pattern, || Ok(ket.clone()))
}

fn herald_reduced<K: FnOnce() -> Result<KetForm>>(rf: &ReducedForm, pattern: &HeraldPattern, ket: K) -> Result<HeraldedState> {
    let outputs = pattern.heralded_modes(rf.num_modes);
    if outputs.len() != 1 {
        return Err(Error::Unsupported(format!(
            "{} unmeasured modes; use the number-basis path for multimode outputs",
            outputs.len()
        )));
    }
    let b11 = rf.blocks.as_ref().expect("partitioned").r_hh[(0, 0)];
    let gp = gate_params(rf, b11)?;
    let probability = probability_from_blocks(rf, pattern)?;
    if probability <= 0.0 {
        return Err(Error::Invalid("detection pattern has zero probability".into()));
    }
    let cq = core_quantities(rf, &gp)?;
    let n_t = pattern.total();

    let (raw, path) = if n_t == 0 {
        (vec![C64::new(1.0, 0.0)], HeraldPath::ClosedForm)
    } else if cq.degenerate.is_none() {
        (coefficient_ratios(pattern, &cq)?, HeraldPath::ClosedForm)
    } else {
        (fallback_coeffs(&ket()?, pattern, &gp, probability)?, HeraldPath::Fock)
    };
    let coeffs = normalise(&raw);
    let n_max = coeffs.iter().rposition(|z| z.norm() > COEFF_TRIM).unwrap_or(0);
    Ok(HeraldedState {
        output_mode: outputs[0],
        zeta: gp.zeta,
        beta: gp.beta,
        coeffs: coeffs[..=n_max].to_vec(),
        n_max,
        probability,
        path,
    })
}

fn fallback_coeffs(ket: &KetForm, pattern: &HeraldPattern, gp: &GateParams, probability: f64) -> Result<Vec<C64>> {
    let n_t = pattern.total();
    let r = gp.zeta.norm();
    let mut cutoff = n_t + 24 + (8.0 * (gp.beta.norm_sqr() + r.sinh().powi(2) * (n_t + 1) as f64)) as usize;
    loop {
        let fv = conditional_amplitudes(ket, pattern, cutoff)?;
        let tail = 1.0 - fv.norm_sqr() / probability;
        if tail < FALLBACK_TAIL {
            let scale = probability.sqrt();
            let psi: Vec<C64> = fv.amps.iter().map(|z| z / scale).collect();
            let (c, _) = strip_vector(&psi, gp.zeta, gp.beta);
            return Ok(c[..=n_t].to_vec());
        }
        if cutoff > 600 {
            return Err(Error::CutoffTooSmall { cutoff, tail });
        }
        cutoff = cutoff * 3 / 2;
    }
}

fn normalise(raw: &[C64]) -> Vec<C64> {
    let norm: f64 = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let max = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let lead = raw.iter().find(|z| z.norm() > 1e-8 * max).cloned().unwrap_or(C64::new(1.0, 0.0));
    let phase = lead.conj() / lead.norm();
    raw.iter().map(|z| if norm > 0.0 { z * phase / norm } else { ZERO }).collect()
}
