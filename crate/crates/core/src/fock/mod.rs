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

//! Truncated number-basis reference path.
//!
//! Amplitudes come straight from the ket form of the circuit, one loop
//! hafnian per basis element. Heralding probabilities use the marginal
//! photon-counting formula on the reduced state of the detected modes,
//! which does not share any algebra with the block formulas of
//! [`crate::herald`].

pub mod gate;

use serde::{Deserialize, Serialize};

use crate::derivative::multiset_loop_hafnian;
use crate::error::{Error, Result};
use crate::gaussian::{make_state, CircuitParams, GaussianState, KetForm};
use crate::herald::{reduced_form, HeraldPattern};
use crate::linalg::{sqrt_factorial, submatrix, subvector, C64, ZERO};

pub use gate::{gate_matrix, gate_vector, squeezed_coherent, strip_vector};

/// Relative truncation tail above which a warning is raised.
pub const TAIL_WARN: f64 = 1e-6;

/// Largest dense vector the reference path will allocate.
pub const MAX_FOCK_LEN: usize = 1 << 22;

/// Dense amplitudes on `modes` modes, each truncated to `0..cutoff`.
/// Index order is row-major with mode 0 most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    pub modes: usize,
    pub cutoff: usize,
    pub amps: Vec<C64>,
}

impl FockVector {
    pub fn zeros(modes: usize, cutoff: usize) -> Result<Self> {
        let len = checked_len(modes, cutoff)?;
        Ok(FockVector { modes, cutoff, amps: vec![ZERO; len] })
    }

    pub fn from_single_mode(amps: Vec<C64>) -> Self {
        FockVector { modes: 1, cutoff: amps.len(), amps }
    }

    pub fn index(&self, occ: &[usize]) -> usize {
        occ.iter().fold(0, |acc, &n| acc * self.cutoff + n)
    }

    pub fn occupation(&self, mut idx: usize) -> Vec<usize> {
        let mut occ = vec![0; self.modes];
        for k in (0..self.modes).rev() {
            occ[k] = idx % self.cutoff;
            idx /= self.cutoff;
        }
        occ
    }

    pub fn get(&self, occ: &[usize]) -> C64 {
        if occ.iter().any(|&n| n >= self.cutoff) {
            return ZERO;
        }
        self.amps[self.index(occ)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> FockVector {
        let n = self.norm_sqr().sqrt();
        let amps = if n > 0.0 { self.amps.iter().map(|z| z / n).collect() } else { self.amps.clone() };
        FockVector { amps, ..self.clone() }
    }

    /// `|⟨self|other⟩|²` of the normalised vectors.
    pub fn overlap(&self, other: &FockVector) -> f64 {
        if self.modes != other.modes {
            return 0.0;
        }
        let modes = self.modes;
        let mut acc = ZERO;
        let cut = self.cutoff.min(other.cutoff);
        let total = cut.pow(modes as u32);
        for i in 0..total {
            let mut idx = i;
            let mut occ = vec![0; modes];
            for k in (0..modes).rev() {
                occ[k] = idx % cut;
                idx /= cut;
            }
            acc += self.get(&occ).conj() * other.get(&occ);
        }
        acc.norm_sqr() / (self.norm_sqr() * other.norm_sqr())
    }
}

fn checked_len(modes: usize, cutoff: usize) -> Result<usize> {
    let len = (0..modes).try_fold(1usize, |acc, _| acc.checked_mul(cutoff)).unwrap_or(usize::MAX);
    if len > MAX_FOCK_LEN {
        return Err(Error::TooLarge { size: len, cap: MAX_FOCK_LEN });
    }
    Ok(len)
}

/// `⟨n_1 … n_N|ψ⟩` for the ket form of a pure state.
pub fn ket_amplitude(ket: &KetForm, occ: &[usize]) -> Result<C64> {
    let g: Vec<C64> = ket.g.iter().cloned().collect();
    let lh = multiset_loop_hafnian(&ket.b, &g, occ)?;
    let norm: f64 = occ.iter().map(|&n| sqrt_factorial(n)).product();
    Ok(ket.vacuum_amplitude * lh / norm)
}

pub fn fock_amplitude(params: &CircuitParams, occ: &[usize]) -> Result<C64> {
    if occ.len() != params.num_modes() {
        return Err(Error::Invalid(format!("{} occupations for {} modes", occ.len(), params.num_modes())));
    }
    ket_amplitude(&params.ket_form()?, occ)
}

/// Probability of the detection pattern, from the reduced state of the
/// detected modes alone.
pub fn marginal_probability(state: &GaussianState, pattern: &HeraldPattern) -> Result<f64> {
    let n = state.num_modes();
    pattern.validate_for(n)?;
    let mut idx: Vec<usize> = pattern.detected.clone();
    idx.extend(pattern.detected.iter().map(|&k| k + n));
    let sub = GaussianState::new(submatrix(state.cov(), &idx, &idx), subvector(state.disp(), &idx))?;
    let rf = reduced_form(&sub)?;
    let diag: Vec<C64> = rf.y_tilde.iter().cloned().collect();
    let counts: Vec<usize> = pattern.counts.iter().chain(pattern.counts.iter()).cloned().collect();
    let lh = multiset_loop_hafnian(&rf.r_tilde, &diag, &counts)?;
    let fact: f64 = pattern.counts.iter().map(|&c| sqrt_factorial(c).powi(2)).product();
    Ok((rf.p0 * lh.re / fact).max(0.0))
}

/// Unnormalised conditional state on the unmeasured modes.
pub fn conditional_amplitudes(ket: &KetForm, pattern: &HeraldPattern, cutoff: usize) -> Result<FockVector> {
    let n = ket.b.nrows();
    pattern.validate_for(n)?;
    let outputs = pattern.heralded_modes(n);
    let mut fv = FockVector::zeros(outputs.len(), cutoff)?;
    let mut occ = vec![0; n];
    for (&m, &c) in pattern.detected.iter().zip(&pattern.counts) {
        occ[m] = c;
    }
    for i in 0..fv.amps.len() {
        let out = fv.occupation(i);
        for (&m, &c) in outputs.iter().zip(&out) {
            occ[m] = c;
        }
        fv.amps[i] = ket_amplitude(ket, &occ)?;
    }
    Ok(fv)
}

/// Heralded state on a truncated grid together with its bookkeeping.
#[derive(Debug, Clone)]
pub struct HeraldedFock {
    /// Normalised conditional state of the unmeasured modes.
    pub state: FockVector,
    /// Exact heralding probability.
    pub probability: f64,
    /// Probability mass inside the cutoff.
    pub captured: f64,
    /// `1 − captured / probability`.
    pub tail: f64,
}

impl HeraldedFock {
    pub fn warn(&self) -> bool {
        self.tail > TAIL_WARN
    }
}

pub fn heralded_fock(params: &CircuitParams, pattern: &HeraldPattern, cutoff: usize) -> Result<HeraldedFock> {
    let ket = params.ket_form()?;
    let raw = conditional_amplitudes(&ket, pattern, cutoff)?;
    let probability = marginal_probability(&make_state(params)?, pattern)?;
    let captured = raw.norm_sqr();
    let tail = if probability > 0.0 { (1.0 - captured / probability).max(0.0) } else { 0.0 };
    Ok(HeraldedFock { state: raw.normalized(), probability, captured, tail })
}

/// `S(ζ)† D(β)†` applied to a single-mode vector; the second value is the
/// norm lost to truncation.
pub fn gate_strip(fv: &FockVector, zeta: C64, beta: C64) -> Result<(FockVector, f64)> {
    if fv.modes != 1 {
        return Err(Error::Unsupported("gate_strip acts on a single mode".into()));
    }
    let (out, lost) = strip_vector(&fv.amps, zeta, beta);
    Ok((FockVector::from_single_mode(out), lost))
}

/// Serialised sparse form: nonzero entries only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FockVectorJson {
    pub modes: usize,
    pub cutoff: usize,
    pub amps: Vec<FockEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FockEntry {
    pub idx: Vec<usize>,
    pub re: f64,
    pub im: f64,
}

impl From<&FockVector> for FockVectorJson {
    fn from(fv: &FockVector) -> Self {
        let amps = fv
            .amps
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > 1e-15)
            .map(|(i, z)| FockEntry { idx: fv.occupation(i), re: z.re, im: z.im })
            .collect();
        FockVectorJson { modes: fv.modes, cutoff: fv.cutoff, amps }
    }
}

impl TryFrom<&FockVectorJson> for FockVector {
    type Error = Error;

    fn try_from(j: &FockVectorJson) -> Result<Self> {
        let mut fv = FockVector::zeros(j.modes, j.cutoff)?;
        for e in &j.amps {
            if e.idx.len() != j.modes || e.idx.iter().any(|&n| n >= j.cutoff) {
                return Err(Error::Invalid(format!("fock index {:?} out of range", e.idx)));
            }
            let i = fv.index(&e.idx);
            fv.amps[i] = C64::new(e.re, e.im);
        }
        Ok(fv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circuit() -> CircuitParams {
        CircuitParams::vacuum(3)
            .with_squeezing(0, 0.5, 0.2)
            .with_squeezing(1, 0.7, -1.0)
            .with_squeezing(2, 0.3, 0.6)
            .with_displacement(0, C64::new(0.3, 0.1))
            .with_displacement(2, C64::new(-0.2, 0.4))
            .with_rotation(0, 1, 0.6, 0.3)
            .with_rotation(1, 2, 0.9, -0.5)
            .with_rotation(0, 2, -0.4, 1.1)
    }

    #[test]
    fn single_mode_squeezed_amplitudes() {
        let r: f64 = 0.6;
        let p = CircuitParams::vacuum(1).with_squeezing(0, r, 0.0);
        let a2 = fock_amplitude(&p, &[2]).unwrap();
        let expect = r.tanh() / r.cosh().sqrt() / 2f64.sqrt();
        assert!((a2 - C64::new(expect, 0.0)).norm() < 1e-14);
        assert!(fock_amplitude(&p, &[1]).unwrap().norm() < 1e-15);
    }

    #[test]
    fn marginal_matches_amplitude_sum() {
        let p = circuit();
        let pattern = HeraldPattern::new(vec![1, 2], vec![2, 1]).unwrap();
        let hf = heralded_fock(&p, &pattern, 60).unwrap();
        assert!(hf.tail < 1e-10, "tail {}", hf.tail);
        assert!((hf.captured - hf.probability).abs() < 1e-10 * hf.probability);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let p = CircuitParams::vacuum(2)
            .with_squeezing(0, 0.3, 0.0)
            .with_squeezing(1, 0.2, 1.0)
            .with_rotation(0, 1, 0.5, 0.2);
        let s = make_state(&p).unwrap();
        let total: f64 = (0..40)
            .map(|n| marginal_probability(&s, &HeraldPattern::new(vec![1], vec![n]).unwrap()).unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn json_round_trip() {
        let mut fv = FockVector::zeros(2, 3).unwrap();
        let i = fv.index(&[1, 2]);
        fv.amps[i] = C64::new(0.5, -0.25);
        let j = FockVectorJson::from(&fv);
        let back = FockVector::try_from(&j).unwrap();
        assert_eq!(back, fv);
    }
}
