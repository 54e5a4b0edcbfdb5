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

use gaussherald::fock::heralded_fock;
use gaussherald::gaussian::CircuitParams;
use gaussherald::herald::{herald_circuit, HeraldPattern};
use gaussherald::linalg::{CMat, C64, ZERO};
use gaussherald::reproduce::{cat_circuit, cat_pattern, cat_table, gkp_gate_form, CAT_TABLE};
use gaussherald::target::{
    approximate_gate_form, balanced_pattern, dimension_bound, optimize_circuit, ratios_from, realize_circuit, render_single, render_target,
    solve_inverse, ApproxOptions, DesignOptions, DesignStatus, Evaluator, InverseOptions, InverseRoot, Parity, TargetState,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cx<R: Rng>(rng: &mut R, s: f64) -> C64 {
    C64::new(rng.random_range(-s..s), rng.random_range(-s..s))
}

fn random_root<R: Rng>(rng: &mut R, k: usize) -> InverseRoot {
    let nu = (0..k).map(|_| cx(rng, 1.0)).collect();
    let mut f = CMat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let z = cx(rng, 0.8);
            f[(i, j)] = z;
            f[(j, i)] = z;
        }
    }
    InverseRoot { nu, f: f.transpose().iter().cloned().collect(), residual: 0.0 }
}

fn ratios_of(coeffs: &[C64]) -> Vec<C64> {
    let top = *coeffs.last().unwrap();
    coeffs.iter().map(|c| c / top).collect()
}

#[test]
fn dimension_bounds() {
    assert_eq!(dimension_bound(2), 2);
    assert_eq!(dimension_bound(3), 5);
    assert_eq!(dimension_bound(4), 9);
    let p = balanced_pattern(3, 5).unwrap();
    assert_eq!(p.detected, vec![1, 2]);
    assert_eq!(p.counts, vec![2, 3]);
}

#[test]
fn realised_circuit_reproduces_ratios() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for counts in [vec![2], vec![1, 2], vec![2, 1, 1]] {
        let k = counts.len();
        let pattern = HeraldPattern::new((1..=k).collect(), counts).unwrap();
        let root = random_root(&mut rng, k);
        let expect = ratios_from(&root.nu, &root.f_matrix(), &pattern).unwrap();
        let circuit = realize_circuit(&root, &pattern, 2.3).unwrap();
        let hs = herald_circuit(&circuit, &pattern).unwrap();
        assert!(hs.zeta.norm() < 1e-9 && hs.beta.norm() < 1e-9, "gate not trivial: {} {}", hs.zeta, hs.beta);
        let got = ratios_of(&hs.coeffs);
        assert_eq!(got.len(), expect.len());
        for (g, e) in got.iter().zip(&expect) {
            assert!((g - e).norm() < 1e-6 * (1.0 + e.norm()), "{g} vs {e}");
        }
    }
}

#[test]
fn inverse_recovers_a_circuit_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pattern = HeraldPattern::new(vec![1, 2], vec![1, 2]).unwrap();
    let root = random_root(&mut rng, 2);
    let circuit = realize_circuit(&root, &pattern, 2.3).unwrap();
    let target = herald_circuit(&circuit, &pattern).unwrap().coeffs;
    let res = solve_inverse(&target, &pattern, &InverseOptions::default()).unwrap();
    assert!(!res.roots.is_empty());
    for r in &res.roots {
        let back = ratios_from(&r.nu, &r.f_matrix(), &pattern).unwrap();
        for (b, t) in back.iter().zip(ratios_of(&target)) {
            assert!((b - t).norm() < 1e-6 * (1.0 + t.norm()));
        }
    }
}

#[test]
fn cubic_targets_are_solvable() {
    let pattern = HeraldPattern::new(vec![1, 2], vec![1, 2]).unwrap();
    for a in [0.05, 0.1, 0.2] {
        let t = render_single(&TargetState::Cubic { a }, 4).unwrap();
        let res = solve_inverse(&t, &pattern, &InverseOptions { starts: 4, ..Default::default() }).unwrap();
        let root = res.roots.first().expect("a root");
        let hs = herald_circuit(&realize_circuit(root, &pattern, 2.3).unwrap(), &pattern).unwrap();
        let dot: C64 = t.iter().zip(&hs.fock_amplitudes(4)).map(|(x, y)| x.conj() * y).sum();
        assert!(dot.norm_sqr() > 1.0 - 1e-9);
    }
}

#[test]
fn gate_form_beats_forward_cat_circuit() {
    // the forward circuit is one feasible gate form with three coefficients
    let forward = cat_table().unwrap()[1].fidelity;
    let target = render_single(&TargetState::Cat { alpha: 0.5, parity: Parity::Even }, 40).unwrap();
    let g = approximate_gate_form(&target, 2, &ApproxOptions::default());
    assert!(g.fidelity >= forward - 1e-9, "{} < {forward}", g.fidelity);
}

#[test]
fn gkp_gate_form_is_near_optimal_start() {
    let target = render_single(&TargetState::Gkp { delta: 0.35 }, 100).unwrap();
    let (zeta, _) = gkp_gate_form();
    let (_, quoted) = gaussherald::target::project_gate_form(&target, 4, zeta, ZERO);
    let g = approximate_gate_form(&target, 4, &ApproxOptions::default());
    assert!(quoted > 0.81);
    assert!(g.fidelity >= quoted - 1e-6);
}

#[test]
fn evaluator_matches_forward_table() {
    let rows = cat_table().unwrap();
    for (r, check) in CAT_TABLE.iter().zip(&rows).step_by(3) {
        let eval = Evaluator::new(&TargetState::Cat { alpha: r.alpha, parity: Parity::Even }, 2, &cat_pattern(), Some(80)).unwrap();
        let (f, p) = eval.evaluate(&cat_circuit(r)).unwrap();
        assert!((f - check.fidelity).abs() < 1e-9);
        assert!((p - check.probability).abs() < 1e-12);
    }
}

#[test]
fn multimode_evaluator_matches_number_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pattern = HeraldPattern::new(vec![2, 3], vec![1, 1]).unwrap();
    let target = TargetState::Noon { n: 2 };
    let eval = Evaluator::new(&target, 4, &pattern, None).unwrap();
    let t = render_target(&target, 6).unwrap();
    for _ in 0..3 {
        let p = CircuitParams::random(&mut rng, 4, 0.7, 0.0);
        let (f, prob) = eval.evaluate(&p).unwrap();
        let hf = heralded_fock(&p, &pattern, 6).unwrap();
        let dot: C64 = t.amps.iter().zip(&hf.state.amps).map(|(a, b)| a.conj() * b).sum();
        // fidelity against the exact (untruncated) heralded state
        let exact = dot.norm_sqr() * hf.captured / hf.probability;
        assert!((f - exact).abs() < 1e-10, "{f} vs {exact}");
        assert!((prob - hf.probability).abs() < 1e-12);
    }
}

#[test]
fn design_is_deterministic_and_flags_infeasible() {
    let target = TargetState::Cat { alpha: 1.0, parity: Parity::Even };
    let opts = DesignOptions { restarts: 2, seed: 9, ..Default::default() };
    let a = optimize_circuit(&target, 2, &cat_pattern(), &opts).unwrap();
    let b = optimize_circuit(&target, 2, &cat_pattern(), &opts).unwrap();
    assert_eq!(a.probability, b.probability);
    assert_eq!(a.fidelity, b.fidelity);

    let hard = TargetState::Cat { alpha: 2.0, parity: Parity::Even };
    let opts = DesignOptions { restarts: 2, seed: 9, fidelity_floor: 0.9999, evals_per_dim: 60, ..Default::default() };
    let r = optimize_circuit(&hard, 2, &cat_pattern(), &opts).unwrap();
    assert_eq!(r.status, DesignStatus::Infeasible);
    assert!(r.fidelity < 0.9999);
}

#[test]
fn design_rejects_mismatched_target() {
    let pattern = HeraldPattern::new(vec![1], vec![1]).unwrap();
    let err = optimize_circuit(&TargetState::W { modes: 2 }, 2, &pattern, &DesignOptions::default()).unwrap_err();
    assert!(!err.is_numerical());
}
