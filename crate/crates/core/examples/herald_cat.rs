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

//! Herald a two-mode squeezed circuit into an even cat state.
//!
//! cargo run --release --example herald_cat

use gaussherald::gaussian::CircuitParams;
use gaussherald::herald::{herald_circuit, HeraldPattern};
use gaussherald::target::{fidelity, render_single, Parity, TargetState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = CircuitParams::vacuum(2)
        .with_real_squeezing(0, 1.3073)
        .with_real_squeezing(1, -0.1474)
        .with_rotation(0, 1, -0.9686, 0.0);
    let pattern = HeraldPattern::new(vec![1], vec![2])?;
    let hs = herald_circuit(&circuit, &pattern)?;

    println!("probability  {:.4}", hs.probability);
    println!("zeta         {:.4}", hs.zeta);
    for (n, c) in hs.coeffs.iter().enumerate() {
        println!("c_{n}          {c:.5}");
    }
    let cat = render_single(&TargetState::Cat { alpha: 1.0, parity: Parity::Even }, 60)?;
    println!("fidelity     {:.5}", fidelity(&cat, &hs.fock_amplitudes(60)));
    Ok(())
}
