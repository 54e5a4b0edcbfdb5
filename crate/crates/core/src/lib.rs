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

//! Heralded non-Gaussian states from multimode Gaussian circuits.
//!
//! A pure Gaussian state on `N` modes is measured with photon-number
//! resolving detectors on all but one mode. The remaining mode is left in
//! `D(β) S(ζ) Σ_{n ≤ n_T} c_n |n⟩`; [`herald`] computes `β`, `ζ`, the
//! coefficients and the heralding probability in closed form, [`fock`]
//! does the same by brute force, and [`target`] runs the inverse problem
//! and the circuit search.
//!
//! ```
//! use gaussherald::gaussian::CircuitParams;
//! use gaussherald::herald::{herald_circuit, HeraldPattern};
//!
//! let circuit = CircuitParams::vacuum(2)
//!     .with_real_squeezing(0, 1.3073)
//!     .with_real_squeezing(1, -0.1474)
//!     .with_rotation(0, 1, -0.9686, 0.0);
//! let hs = herald_circuit(&circuit, &HeraldPattern::new(vec![1], vec![2]).unwrap()).unwrap();
//! assert!((hs.probability - 0.112).abs() < 1e-3);
//! ```

pub mod cli;
pub mod derivative;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod herald;
pub mod io;
pub mod linalg;
pub mod reproduce;
pub mod target;
