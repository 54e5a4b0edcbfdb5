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

use gaussherald::fock::{heralded_fock, marginal_probability, FockVector};
use gaussherald::gaussian::{make_state, CircuitParams};
use gaussherald::herald::{
    block_partition, coefficient_products, coefficient_ratios, core_quantities, gate_params, herald, herald_probability,
    reduced_form, wigner_closed_form, wigner_eval, HeraldPath, HeraldPattern,
};
use gaussherald::linalg::C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table_row(z1: f64, z2: f64, theta: f64) -> CircuitParams {
    CircuitParams::vacuum(2)
        .with_real_squeezing(0, z1)
        .with_real_squeezing(1, z2)
        .with_rotation(0, 1, theta, 0.0)
}

fn even_cat(alpha: f64, cutoff: usize) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); cutoff];
    let mut term = (-0.5 * alpha * alpha).exp();
    for (n, slot) in v.iter_mut().enumerate() {
        if n > 0 {
            term *= alpha / (n as f64).sqrt();
        }
        if n % 2 == 0 {
            *slot = C64::new(term, 0.0);
        }
    }
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter().map(|z| z / norm).collect()
}

fn overlap(a: &[C64], b: &[C64]) -> f64 {
    let s: C64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    s.norm_sqr()
}

#[test]
fn cat_row_alpha_one() {
    let p = table_row(1.3073, -0.1474, -0.9686);
    let hs = herald(&make_state(&p).unwrap(), &HeraldPattern::new(vec![1], vec![2]).unwrap()).unwrap();
    assert_eq!(hs.path, HeraldPath::ClosedForm);
    assert!((hs.probability - 0.1120).abs() < 5e-4, "P = {}", hs.probability);
    let fid = overlap(&even_cat(1.0, 80), &hs.fock_amplitudes(80));
    assert!((fid - 0.9999).abs() < 2e-4, "F = {fid}");
    assert!((hs.zeta.norm() - 0.1796).abs() < 2e-3, "zeta = {}", hs.zeta);
}

#[test]
fn closed_form_matches_fock_on_random_circuits() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for modes in 2..=4 {
        for _ in 0..6 {
            let p = CircuitParams::random(&mut rng, modes, 0.8, 0.4);
            let detected: Vec<usize> = (1..modes).collect();
            let counts: Vec<usize> = (0..modes - 1).map(|k| 1 + (k % 2)).collect();
            let pattern = HeraldPattern::new(detected, counts).unwrap();
            let hs = herald(&make_state(&p).unwrap(), &pattern).unwrap();
            let hf = heralded_fock(&p, &pattern, 70).unwrap();
            assert!(hf.tail < 1e-9, "tail {}", hf.tail);
            let ov = overlap(&hs.fock_amplitudes(70), &hf.state.amps);
            assert!(ov > 1.0 - 1e-9, "overlap {ov}");
            let rel = (hs.probability - hf.probability).abs() / hf.probability;
            assert!(rel < 1e-8, "probability {} vs {}", hs.probability, hf.probability);
        }
    }
}

#[test]
fn ratios_and_products_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = CircuitParams::random(&mut rng, 3, 0.9, 0.3);
    let pattern = HeraldPattern::new(vec![1, 2], vec![2, 1]).unwrap();
    let rf = block_partition(&reduced_form(&make_state(&p).unwrap()).unwrap(), &pattern).unwrap();
    let b11 = rf.blocks.as_ref().unwrap().r_hh[(0, 0)];
    let gp = gate_params(&rf, b11).unwrap();
    let cq = core_quantities(&rf, &gp).unwrap();
    let ratios = coefficient_ratios(&pattern, &cq).unwrap();
    let t = coefficient_products(&pattern, &cq).unwrap();
    let nt = 3;
    let scale = t[(nt, nt)];
    for m in 0..=nt {
        for n in 0..=nt {
            let expect = ratios[m] * ratios[n].conj();
            let got = t[(m, n)] / scale;
            assert!((got - expect).norm() < 1e-9 * (1.0 + expect.norm()), "({m},{n}) {got} vs {expect}");
        }
    }
}

#[test]
fn multimode_probability_matches_marginal() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p = CircuitParams::random(&mut rng, 4, 0.7, 0.3);
    let s = make_state(&p).unwrap();
    let pattern = HeraldPattern::new(vec![2, 3], vec![1, 2]).unwrap();
    let a = herald_probability(&s, &pattern).unwrap();
    let b = marginal_probability(&s, &pattern).unwrap();
    assert!((a - b).abs() < 1e-10 * b, "{a} vs {b}");
}

#[test]
fn decoupled_detector_uses_fock_path() {
    // mode 2 is squeezed but never mixed with the output
    let p = CircuitParams::vacuum(3)
        .with_squeezing(0, 0.8, 0.0)
        .with_squeezing(1, 0.2, 0.0)
        .with_squeezing(2, 0.5, 0.0)
        .with_rotation(0, 1, 0.7, 0.0);
    let pattern = HeraldPattern::new(vec![1, 2], vec![1, 2]).unwrap();
    let hs = herald(&make_state(&p).unwrap(), &pattern).unwrap();
    assert_eq!(hs.path, HeraldPath::Fock);
    let hf = heralded_fock(&p, &pattern, 60).unwrap();
    assert!(overlap(&hs.fock_amplitudes(60), &hf.state.amps) > 1.0 - 1e-9);
    assert!((hs.probability - hf.probability).abs() < 1e-10);
    assert!(hs.n_max <= 1, "n_max {}", hs.n_max);
}

#[test]
fn wigner_closed_form_matches_number_basis() {
    let p = table_row(1.3073, -0.1474, -0.9686);
    let s = make_state(&p).unwrap();
    let pattern = HeraldPattern::new(vec![1], vec![2]).unwrap();
    let hs = herald(&s, &pattern).unwrap();
    let pts: Vec<C64> = [(0.0, 0.0), (0.7, 0.2), (-0.3, 0.9), (1.5, -0.4)].iter().map(|&(a, b)| C64::new(a, b)).collect();
    let a = wigner_eval(&hs, &pts);
    let b = wigner_closed_form(&s, &pattern, &pts).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() < 1e-8, "{x} vs {y}");
    }
}

#[test]
fn vacuum_wigner_peak() {
    let s = make_state(&CircuitParams::vacuum(2)).unwrap();
    let hs = herald(&s, &HeraldPattern::new(vec![1], vec![0]).unwrap()).unwrap();
    let w = wigner_eval(&hs, &[C64::new(0.0, 0.0)]);
    assert!((w[0] - 2.0 / std::f64::consts::PI).abs() < 1e-14);
}

#[test]
fn fock_vector_overlap_is_normalised() {
    let v = FockVector::from_single_mode(vec![C64::new(1.0, 0.0), C64::new(0.0, 1.0)]);
    assert!((v.overlap(&v) - 1.0).abs() < 1e-15);
}
