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

//! The derivative kernel against a truncated power series.

use gaussherald::derivative::taylor::taylor_oracle;
use gaussherald::derivative::{gaussian_derivative, loop_hafnian, DerivOrder, GaussianForm, Monomial};
use gaussherald::linalg::{CMat, CVec, C64};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = 3;
    let m = CMat::from_fn(2 * k, 2 * k, |i, j| C64::new(0.2 * ((i * 3 + j) % 5) as f64 - 0.4, 0.1 * ((i + j) % 3) as f64));
    let m = (&m + m.transpose()) * C64::new(0.5, 0.0);
    let form = GaussianForm::new(m.clone(), CVec::from_fn(2 * k, |i, _| C64::new(0.3, 0.1 * i as f64)))?;

    for order in [
        DerivOrder::new(vec![1, 1, 1]),
        DerivOrder::new(vec![2, 1, 0]).with_monomial(Monomial::unit(k, 1, 2)),
    ] {
        let fast = gaussian_derivative(&form, &order)?;
        let slow = taylor_oracle(&form, &order)?;
        println!("orders {:?}: kernel {fast:.10}  series {slow:.10}", order.orders);
    }
    println!("lhaf of the 6x6 matrix: {:.8}", loop_hafnian(&m)?);
    Ok(())
}
