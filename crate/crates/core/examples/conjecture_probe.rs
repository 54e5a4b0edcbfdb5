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

//! How often a random target with n_T + 1 coefficients is reachable.

use gaussherald::target::{conjecture_probe, dimension_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let modes = 2;
    let d = dimension_bound(modes);
    for n_t in [d, d + 1] {
        let s = conjecture_probe(modes, n_t, 50, 1, 16)?;
        println!("N={modes} n_T={n_t} pattern {:?}: {}/{} solved", s.pattern.counts, s.solved, s.trials);
    }
    Ok(())
}
