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

//! Wigner function of a heralded cat on a grid, printed as CSV.

use gaussherald::gaussian::CircuitParams;
use gaussherald::herald::{herald_circuit, wigner_grid, HeraldPattern};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = CircuitParams::vacuum(2)
        .with_real_squeezing(0, 1.3780)
        .with_real_squeezing(1, -0.1898)
        .with_rotation(0, 1, 0.8606, 0.0);
    let hs = herald_circuit(&circuit, &HeraldPattern::new(vec![1], vec![2])?)?;
    let grid = wigner_grid(&hs, (-4.0, 4.0), (-3.0, 3.0), 31);

    let min = grid.values.iter().flatten().cloned().fold(f64::INFINITY, f64::min);
    eprintln!("most negative value {min:.4}");
    println!("x,p,w");
    for (i, x) in grid.xs.iter().enumerate() {
        for (j, p) in grid.ps.iter().enumerate() {
            println!("{x:.3},{p:.3},{:.6}", grid.values[i][j]);
        }
    }
    Ok(())
}
