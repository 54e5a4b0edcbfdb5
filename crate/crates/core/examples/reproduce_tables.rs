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

//! Recompute the cat forward table and the GKP gate-form fidelity.

use gaussherald::reproduce::{cat_table, gkp_gate_form_fidelity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("alpha  F      F_ref   P       P_ref");
    for r in cat_table()? {
        println!(
            "{:<5}  {:.4} {:.4}  {:.4}  {:.4}",
            r.reference.alpha, r.fidelity, r.reference.fidelity, r.probability, r.reference.probability
        );
    }
    println!("GKP gate form fidelity {:.4}", gkp_gate_form_fidelity()?);
    Ok(())
}
