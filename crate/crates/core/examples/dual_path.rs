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

//! Closed-form heralding against a brute-force number-basis computation.

use gaussherald::fock::heralded_fock;
use gaussherald::gaussian::CircuitParams;
use gaussherald::herald::{herald_circuit, HeraldPattern};
use gaussherald::linalg::C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let circuit = CircuitParams::random(&mut rng, 4, 0.8, 0.3);
    let pattern = HeraldPattern::new(vec![1, 2, 3], vec![1, 2, 1])?;

    let t = std::time::Instant::now();
    let closed = herald_circuit(&circuit, &pattern)?;
    let t_closed = t.elapsed();

    let cutoff = closed.suggested_cutoff().min(100);
    let t = std::time::Instant::now();
    let fock = heralded_fock(&circuit, &pattern, cutoff)?;
    let t_fock = t.elapsed();

    let psi = closed.fock_amplitudes(cutoff);
    let overlap: C64 = psi.iter().zip(&fock.state.amps).map(|(a, b)| a.conj() * b).sum();
    println!("closed form  P = {:.12}  ({t_closed:?})", closed.probability);
    println!("number basis P = {:.12}  ({t_fock:?}, cutoff {cutoff}, tail {:.1e})", fock.probability, fock.tail);
    println!("|<closed|fock>|^2 = {:.15}", overlap.norm_sqr());
    Ok(())
}
