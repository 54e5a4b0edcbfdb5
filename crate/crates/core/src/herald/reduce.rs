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

use crate::error::{Error, Result};
use crate::gaussian::{vacuum_probability, GaussianState, KetForm};
use crate::linalg::{guarded_inverse, submatrix, subvector, swap_halves, CMat, CVec, C64};

use super::HeraldPattern;

/// `R̃`, `ỹ` and, once partitioned, the heralded/detected blocks.
#[derive(Debug, Clone)]
pub struct ReducedForm {
    pub num_modes: usize,
    /// `X (2V − I)(2V + I)^{-1}`; equals `B ⊕ B*` for pure states.
    pub r_tilde: CMat,
    /// `2 X (2V + I)^{-1} Q`.
    pub y_tilde: CVec,
    /// Vacuum probability `2^N det(2V+I)^{-1/2} exp(−½ Qᵀ ỹ)`.
    pub p0: f64,
    pub blocks: Option<Blocks>,
}

/// Partition of `R = P R̃ Pᵀ` and `y = P ỹ`.
///
/// The permutation lists the creation then annihilation indices of the
/// heralded (unmeasured) modes, followed by the creation then annihilation
/// indices of the detected modes in pattern order. For one heralded mode
/// sitting first this is the move of component `N+1` to position 2.
#[derive(Debug, Clone)]
pub struct Blocks {
    pub heralded: Vec<usize>,
    pub detected: Vec<usize>,
    pub perm: Vec<usize>,
    pub r: CMat,
    pub y: CVec,
    pub r_hh: CMat,
    pub r_hd: CMat,
    pub r_dh: CMat,
    pub r_dd: CMat,
    pub y_h: CVec,
    pub y_d: CVec,
}

impl Blocks {
    pub fn reassemble(&self) -> (CMat, CVec) {
        let h = self.r_hh.nrows();
        let dim = h + self.r_dd.nrows();
        let mut r = CMat::zeros(dim, dim);
        r.view_mut((0, 0), (h, h)).copy_from(&self.r_hh);
        r.view_mut((0, h), (h, dim - h)).copy_from(&self.r_hd);
        r.view_mut((h, 0), (dim - h, h)).copy_from(&self.r_dh);
        r.view_mut((h, h), (dim - h, dim - h)).copy_from(&self.r_dd);
        let y = CVec::from_fn(dim, |i, _| if i < h { self.y_h[i] } else { self.y_d[i - h] });
        (r, y)
    }
}

pub fn reduced_form(state: &GaussianState) -> Result<ReducedForm> {
    let n = state.num_modes();
    let dim = 2 * n;
    let inv = guarded_inverse(&state.two_v_plus_i(), "2V + I")?;
    let x = swap_halves(n);
    let two = C64::new(2.0, 0.0);
    let r_tilde = &x * (state.cov() * two - CMat::identity(dim, dim)) * &inv;
    let y_tilde = &x * &inv * state.disp() * two;
    Ok(ReducedForm {
        num_modes: n,
        r_tilde,
        y_tilde,
        p0: vacuum_probability(state, &inv),
        blocks: None,
    })
}

/// Reduced form of a pure state straight from its ket form, skipping the
/// covariance inversion.
pub fn reduced_form_from_ket(ket: &KetForm) -> ReducedForm {
    let n = ket.b.nrows();
    let mut r_tilde = CMat::zeros(2 * n, 2 * n);
    r_tilde.view_mut((0, 0), (n, n)).copy_from(&ket.b);
    r_tilde.view_mut((n, n), (n, n)).copy_from(&ket.b.map(|z| z.conj()));
    let y_tilde = CVec::from_fn(2 * n, |i, _| if i < n { ket.g[i] } else { ket.g[i - n].conj() });
    ReducedForm { num_modes: n, r_tilde, y_tilde, p0: ket.vacuum_amplitude.norm_sqr(), blocks: None }
}

pub fn block_partition(rf: &ReducedForm, pattern: &HeraldPattern) -> Result<ReducedForm> {
    let n = rf.num_modes;
    pattern.validate_for(n)?;
    let heralded = pattern.heralded_modes(n);
    if heralded.is_empty() {
        return Err(Error::Invalid("pattern measures every mode".into()));
    }
    let detected = pattern.detected.clone();
    let mut perm: Vec<usize> = heralded.clone();
    perm.extend(heralded.iter().map(|&k| k + n));
    perm.extend(detected.iter().cloned());
    perm.extend(detected.iter().map(|&k| k + n));

    let r = submatrix(&rf.r_tilde, &perm, &perm);
    let y = subvector(&rf.y_tilde, &perm);
    let h = 2 * heralded.len();
    let dim = 2 * n;
    let hi: Vec<usize> = (0..h).collect();
    let di: Vec<usize> = (h..dim).collect();
    let blocks = Blocks {
        r_hh: submatrix(&r, &hi, &hi),
        r_hd: submatrix(&r, &hi, &di),
        r_dh: submatrix(&r, &di, &hi),
        r_dd: submatrix(&r, &di, &di),
        y_h: subvector(&y, &hi),
        y_d: subvector(&y, &di),
        heralded,
        detected,
        perm,
        r,
        y,
    };
    Ok(ReducedForm { blocks: Some(blocks), ..rf.clone() })
}
