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

//! Best `D(β) S(ζ) Σ c_n |n⟩` approximations of cat and GKP states.

use gaussherald::target::{approximate_gate_form, render_single, ApproxOptions, Parity, TargetState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (state, n_max) in [
        (TargetState::Cat { alpha: 1.5, parity: Parity::Even }, 2),
        (TargetState::Cat { alpha: 1.5, parity: Parity::Even }, 4),
        (TargetState::Gkp { delta: 0.35 }, 4),
    ] {
        let target = render_single(&state, 100)?;
        let g = approximate_gate_form(&target, n_max, &ApproxOptions::default());
        println!("{} with {} coefficients: F = {:.5}, zeta = {:.4}", state.label(), n_max + 1, g.fidelity, g.zeta);
    }
    Ok(())
}
