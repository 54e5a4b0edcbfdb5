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

//! Covariance matrix, reduced form and a photon-number marginal.

use gaussherald::fock::marginal_probability;
use gaussherald::gaussian::{make_state, purity, CircuitParams};
use gaussherald::herald::{herald_probability, reduced_form, HeraldPattern};
use gaussherald::linalg::C64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = CircuitParams::vacuum(3)
        .with_squeezing(0, 0.8, 0.0)
        .with_squeezing(1, 0.5, 1.2)
        .with_displacement(2, C64::new(0.4, -0.2))
        .with_rotation(0, 1, 0.7, 0.3)
        .with_rotation(1, 2, 0.4, -0.5);
    let state = make_state(&circuit)?;
    println!("purity {:.12}", purity(&state));
    for m in 0..3 {
        println!("<n_{m}> = {:.6}", state.mean_photons(m));
    }
    let rf = reduced_form(&state)?;
    println!("vacuum probability {:.6}", rf.p0);

    let pattern = HeraldPattern::new(vec![0, 2], vec![2, 1])?;
    println!("P(2, _, 1) blocks   {:.10}", herald_probability(&state, &pattern)?);
    println!("P(2, _, 1) marginal {:.10}", marginal_probability(&state, &pattern)?);
    Ok(())
}
