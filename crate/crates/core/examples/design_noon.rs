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

//! NOON states with N photons on two output modes, one detector per photon.

use gaussherald::herald::HeraldPattern;
use gaussherald::target::{optimize_circuit, DesignOptions, TargetState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2usize, 3] {
        let pattern = HeraldPattern::new((2..n + 2).collect(), vec![1; n])?;
        let opts = DesignOptions { restarts: 8, seed: 3, ..Default::default() };
        let t = std::time::Instant::now();
        let r = optimize_circuit(&TargetState::Noon { n }, n + 2, &pattern, &opts)?;
        println!("N={n}: F = {:.5}, P = {:.4}  [{:.1?}]", r.fidelity, r.probability, t.elapsed());
    }
    Ok(())
}
