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

//! Solve for the Gaussian parameters of a weak cubic phase state and build
//! a circuit that heralds it exactly.

use gaussherald::herald::{herald_circuit, HeraldPattern};
use gaussherald::target::{dimension_bound, realize_circuit, render_single, solve_inverse, InverseOptions, TargetState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pattern = HeraldPattern::new(vec![1, 2], vec![1, 2])?;
    println!("n_T = {}, bound for 3 modes = {}", pattern.total(), dimension_bound(3));
    let target = render_single(&TargetState::Cubic { a: 0.1 }, 4)?;
    let res = solve_inverse(&target, &pattern, &InverseOptions::default())?;
    println!("{} roots from {} starts", res.roots.len(), res.starts);

    let best = res
        .roots
        .iter()
        .filter_map(|r| realize_circuit(r, &pattern, 2.3).ok())
        .filter_map(|c| herald_circuit(&c, &pattern).ok())
        .max_by(|a, b| a.probability.total_cmp(&b.probability))
        .ok_or("no realisable root")?;
    println!("best exact circuit: P = {:.4}, |zeta| = {:.1e}", best.probability, best.zeta.norm());
    for (n, c) in best.coeffs.iter().enumerate() {
        println!("  c_{n} = {c:.5}   target {:.5}", target[n]);
    }
    Ok(())
}
