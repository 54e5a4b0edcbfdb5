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

//! Search a four-mode circuit that heralds a three-mode W state.

use gaussherald::herald::HeraldPattern;
use gaussherald::io::CircuitJson;
use gaussherald::target::{optimize_circuit, DesignOptions, TargetState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pattern = HeraldPattern::new(vec![3], vec![1])?;
    let opts = DesignOptions { restarts: 8, seed: 5, fidelity_floor: 0.9999, ..Default::default() };
    let r = optimize_circuit(&TargetState::W { modes: 3 }, 4, &pattern, &opts)?;
    println!("status {:?}: F = {:.6}, P = {:.4} ({} evaluations)", r.status, r.fidelity, r.probability, r.evaluations);
    println!("{}", serde_json::to_string_pretty(&CircuitJson::from_params(&r.circuit))?);
    Ok(())
}
