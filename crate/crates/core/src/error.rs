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

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by state construction, heralding and the design tools.
///
/// Variants fall into two families: input validation problems and
/// numerical guards. The CLI maps them onto exit codes 2 and 3.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("interferometer is not unitary (deviation {0:.3e})")]
    NonUnitary(f64),

    #[error("squeezing {value} exceeds bound {bound} in mode {mode}")]
    SqueezingTooLarge { mode: usize, value: f64, bound: f64 },

    #[error("invalid mode permutation: {0}")]
    BadPermutation(String),

    #[error("matrix `{what}` is ill-conditioned (condition number {cond:.3e})")]
    IllConditioned { what: &'static str, cond: f64 },

    #[error("heralded squeezing diverges: |b11| = {0}")]
    SqueezingDivergence(f64),

    #[error("detected mode {0} is decoupled from the output mode (|kappa| below threshold)")]
    KappaDegenerate(usize),

    #[error("expanded index set of size {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("Fock cutoff {cutoff} too small: truncation tail {tail:.3e}")]
    CutoffTooSmall { cutoff: usize, tail: f64 },

    #[error("no candidate met the fidelity floor {0}")]
    Infeasible(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// `true` for errors caused by numerical guards rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::IllConditioned { .. }
                | Error::SqueezingDivergence(_)
                | Error::KappaDegenerate(_)
                | Error::CutoffTooSmall { .. }
                | Error::Infeasible(_)
        )
    }

    /// Short machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "invalid",
            Error::NonUnitary(_) => "non_unitary",
            Error::SqueezingTooLarge { .. } => "squeezing_too_large",
            Error::BadPermutation(_) => "bad_permutation",
            Error::IllConditioned { .. } => "ill_conditioned",
            Error::SqueezingDivergence(_) => "squeezing_divergence",
            Error::KappaDegenerate(_) => "kappa_degenerate",
            Error::TooLarge { .. } => "too_large",
            Error::CutoffTooSmall { .. } => "cutoff_too_small",
            Error::Infeasible(_) => "infeasible",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
