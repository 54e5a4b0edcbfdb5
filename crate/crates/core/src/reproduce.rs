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

//! Reference studies: the cat-state forward table, the design table, the
//! GKP and cubic phase cases and the self-consistency checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::derivative::taylor::taylor_oracle;
use crate::derivative::{gaussian_derivative, DerivOrder, GaussianForm, Monomial};
use crate::error::Result;
use crate::fock::{gate_vector, heralded_fock};
use crate::gaussian::{make_state, CircuitParams};
use crate::herald::{herald, herald_circuit, herald_probability, HeraldPattern};
use crate::linalg::{CMat, CVec, C64, ZERO};
use crate::target::{fidelity, render_single, DesignOptions, Parity, TargetState};

/// One row of the cat-state forward table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatRow {
    pub alpha: f64,
    pub fidelity: f64,
    pub zeta: f64,
    pub c0_over_c2: f64,
    pub probability: f64,
    pub zeta_0: f64,
    pub zeta_1: f64,
    pub theta: f64,
}

const fn row(v: [f64; 8]) -> CatRow {
    CatRow { alpha: v[0], fidelity: v[1], zeta: v[2], c0_over_c2: v[3], probability: v[4], zeta_0: v[5], zeta_1: v[6], theta: v[7] }
}

/// Reference two-mode cat circuits: squeezing on both modes, one rotation,
/// two photons detected on mode 1.
pub const CAT_TABLE: [CatRow; 8] = [
    row([0.25, 1.0000, 0.0115, 27.717, 0.1812, 1.1587, -0.0136, -1.3965]),
    row([0.50, 1.0000, 0.0458, 6.9428, 0.1549, 1.1936, -0.0499, 1.2351]),
    row([0.75, 0.9999, 0.1025, 3.1112, 0.1287, 1.2447, -0.0982, -1.0927]),
    row([1.00, 0.9999, 0.1796, 1.7885, 0.1120, 1.3073, -0.1474, -0.9686]),
    row([1.25, 0.9991, 0.2730, 1.1932, 0.1055, 1.3780, -0.1898, 0.8606]),
    row([1.50, 0.9958, 0.3763, 0.8841, 0.1051, 1.4546, -0.2228, -0.7668]),
    row([1.75, 0.9870, 0.4832, 0.7082, 0.1073, 1.5346, -0.2464, -0.6859]),
    row([2.00, 0.9709, 0.5884, 0.6011, 0.1101, 1.6150, -0.2626, -0.6170]),
];

pub fn cat_circuit(r: &CatRow) -> CircuitParams {
    CircuitParams::vacuum(2)
        .with_real_squeezing(0, r.zeta_0)
        .with_real_squeezing(1, r.zeta_1)
        .with_rotation(0, 1, r.theta, 0.0)
}

pub fn cat_pattern() -> HeraldPattern {
    HeraldPattern { detected: vec![1], counts: vec![2] }
}

/// Recomputed values next to the reference row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatCheck {
    pub reference: CatRow,
    pub fidelity: f64,
    pub probability: f64,
    pub zeta: f64,
    pub c0_over_c2: f64,
}

pub fn cat_table() -> Result<Vec<CatCheck>> {
    CAT_TABLE
        .iter()
        .map(|r| {
            let hs = herald(&make_state(&cat_circuit(r))?, &cat_pattern())?;
            let target = render_single(&TargetState::Cat { alpha: r.alpha, parity: Parity::Even }, 80)?;
            Ok(CatCheck {
                reference: *r,
                fidelity: fidelity(&target, &hs.fock_amplitudes(80)),
                probability: hs.probability,
                zeta: hs.zeta.re,
                c0_over_c2: (hs.coeffs[0] / hs.coeffs[2]).norm(),
            })
        })
        .collect()
}

/// One design problem with its reference probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignCase {
    pub label: String,
    pub target: TargetState,
    pub modes: usize,
    pub pattern: HeraldPattern,
    pub reference_probability: f64,
    pub fidelity_floor: f64,
}

/// Gate-form GKP approximation with `ζ = 0.294` and support on `|0⟩, |2⟩, |4⟩`.
pub fn gkp_gate_form() -> (C64, Vec<C64>) {
    let c = [0.669, 0.0, -0.216, 0.0, 0.711];
    let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
    (C64::new(0.294, 0.0), c.iter().map(|&x| C64::new(x / norm, 0.0)).collect())
}

/// Fidelity of [`gkp_gate_form`] with the `Δ = 0.35` GKP state.
pub fn gkp_gate_form_fidelity() -> Result<f64> {
    let (zeta, c) = gkp_gate_form();
    let cutoff = 120;
    let target = render_single(&TargetState::Gkp { delta: 0.35 }, cutoff)?;
    Ok(fidelity(&target, &gate_vector(&c, zeta, ZERO, cutoff)))
}

/// [`gkp_gate_form`] rendered as an explicit target.
pub fn gkp_design_target() -> TargetState {
    let (zeta, c) = gkp_gate_form();
    TargetState::Custom { coeffs: gate_vector(&c, zeta, ZERO, 40) }
}

fn pattern(detected: Vec<usize>, counts: Vec<usize>) -> HeraldPattern {
    HeraldPattern { detected, counts }
}

/// The design table: cat, `|0⟩ + |2⟩`, GKP, cubic phase, W and NOON.
pub fn design_cases() -> Vec<DesignCase> {
    let s = 0.5f64.sqrt();
    let mut cases = vec![
        DesignCase {
            label: "cat(1.0)".into(),
            target: TargetState::Cat { alpha: 1.0, parity: Parity::Even },
            modes: 2,
            pattern: cat_pattern(),
            reference_probability: 0.1120,
            fidelity_floor: 0.999,
        },
        DesignCase {
            label: "|0>+|2>".into(),
            target: TargetState::Custom { coeffs: vec![C64::new(s, 0.0), ZERO, C64::new(s, 0.0)] },
            modes: 2,
            pattern: pattern(vec![1], vec![2]),
            reference_probability: 0.1048,
            fidelity_floor: 0.999,
        },
        DesignCase {
            label: "gkp(0.35)".into(),
            target: gkp_design_target(),
            modes: 3,
            pattern: pattern(vec![1, 2], vec![2, 2]),
            reference_probability: 0.011,
            fidelity_floor: 0.999,
        },
        DesignCase {
            label: "cubic(0.1)".into(),
            target: TargetState::Cubic { a: 0.1 },
            modes: 3,
            pattern: pattern(vec![1, 2], vec![1, 2]),
            reference_probability: 0.05,
            fidelity_floor: 0.999,
        },
    ];
    for m in [2, 3] {
        cases.push(DesignCase {
            label: format!("w({m})"),
            target: TargetState::W { modes: m },
            modes: m + 1,
            pattern: pattern(vec![m], vec![1]),
            reference_probability: 0.25,
            fidelity_floor: 0.9999,
        });
    }
    for (n, p) in [(2, 0.0625), (3, 0.0154), (4, 0.0055)] {
        cases.push(DesignCase {
            label: format!("noon({n})"),
            target: TargetState::Noon { n },
            modes: n + 2,
            pattern: pattern((2..n + 2).collect(), vec![1; n]),
            reference_probability: p,
            fidelity_floor: 0.999,
        });
    }
    cases
}

impl DesignCase {
    pub fn options(&self, restarts: usize, seed: u64) -> DesignOptions {
        DesignOptions { restarts, seed, fidelity_floor: self.fidelity_floor, ..Default::default() }
    }
}

/// Closed form against the number basis on one circuit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualPathCase {
    pub modes: usize,
    pub pattern: HeraldPattern,
    pub overlap: f64,
    pub probability_error: f64,
    pub tail: f64,
}

/// `count` random circuits on 2 to 4 modes, 1 to 4 detected photons.
pub fn dual_path(count: usize, seed: u64) -> Result<Vec<DualPathCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let modes = rng.random_range(2..=4);
        let params = CircuitParams::random(&mut rng, modes, 0.8, 0.4);
        let detected: Vec<usize> = (1..modes).collect();
        let n_t = rng.random_range(1..=4usize);
        let mut counts = vec![0; modes - 1];
        for _ in 0..n_t {
            counts[rng.random_range(0..modes - 1)] += 1;
        }
        let pat = HeraldPattern::new(detected, counts)?;
        let hs = herald_circuit(&params, &pat)?;
        let cutoff = hs.suggested_cutoff().min(120);
        let hf = heralded_fock(&params, &pat, cutoff)?;
        let closed = hs.fock_amplitudes(cutoff);
        let dot: C64 = closed.iter().zip(&hf.state.amps).map(|(a, b)| a.conj() * b).sum();
        out.push(DualPathCase {
            modes,
            pattern: pat,
            overlap: dot.norm_sqr(),
            probability_error: (hs.probability - hf.probability).abs() / hf.probability,
            tail: hf.tail,
        });
    }
    Ok(out)
}

fn random_form<R: Rng>(rng: &mut R, pairs: usize) -> Result<GaussianForm> {
    let mut gauss = || C64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal)) * 0.5;
    let d = 2 * pairs;
    let raw = CMat::from_fn(d, d, |_, _| gauss());
    let lin = CVec::from_fn(d, |_, _| gauss());
    GaussianForm::new((&raw + raw.transpose()) * C64::new(0.5, 0.0), lin)
}

/// Relative errors of the derivative kernel against the power-series oracle
/// on `count` random instances.
pub fn derivative_check(count: usize, seed: u64) -> Result<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut errs = Vec::with_capacity(count);
    while errs.len() < count {
        let pairs = rng.random_range(1..=3);
        let form = random_form(&mut rng, pairs)?;
        let orders: Vec<usize> = (0..pairs).map(|_| rng.random_range(0..=3)).collect();
        let mut order = DerivOrder::new(orders);
        let total = order.total();
        if total > 0 && rng.random_bool(0.5) {
            let m = Monomial::unit(pairs, rng.random_range(0..=total.min(2)), rng.random_range(0..=total.min(2)));
            order = order.with_monomial(m);
        }
        if order.expanded_size() > 12 {
            continue;
        }
        let a = gaussian_derivative(&form, &order)?;
        let b = taylor_oracle(&form, &order)?;
        let scale = a.norm().max(b.norm());
        errs.push(if scale == 0.0 { 0.0 } else { (a - b).norm() / scale });
    }
    Ok(errs)
}

/// `Σ_{n ≤ k} P(n)` for photon counting on `mode` of a circuit.
pub fn captured_probability(params: &CircuitParams, mode: usize, k: usize) -> Result<f64> {
    let state = make_state(params)?;
    (0..=k).map(|n| herald_probability(&state, &HeraldPattern::new(vec![mode], vec![n])?)).sum()
}
