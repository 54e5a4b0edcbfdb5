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
use crate::linalg::{guarded_inverse, swap_halves, CMat, CVec, C64, ONE};

use super::reduce::{Blocks, ReducedForm};

/// `|b11|` at or above this is treated as infinite squeezing.
pub const B11_LIMIT: f64 = 1.0 - 1e-9;

/// `|κ_j|` below this makes the ratio formulas unusable.
pub const KAPPA_TOL: f64 = 1e-7;

/// Gaussian gate `D(β) S(ζ)` extracted from the heralded block.
#[derive(Debug, Clone)]
pub struct GateParams {
    pub b11: C64,
    /// `(I + X R_hh) / √(1 − |b11|²)`.
    pub s: CMat,
    /// `(I − X R_hh)^{-1} X y_h = (β*, β)`.
    pub d: CVec,
    pub zeta: C64,
    pub beta: C64,
}

pub(crate) fn blocks_of(rf: &ReducedForm) -> Result<&Blocks> {
    rf.blocks.as_ref().ok_or_else(|| Error::Invalid("reduced form has not been partitioned".into()))
}

pub fn gate_params(rf: &ReducedForm, b11: C64) -> Result<GateParams> {
    let bl = blocks_of(rf)?;
    if bl.heralded.len() != 1 {
        return Err(Error::Unsupported(format!("{} unmeasured modes; the gate form needs one", bl.heralded.len())));
    }
    let mag = b11.norm();
    if !mag.is_finite() || mag >= B11_LIMIT {
        return Err(Error::SqueezingDivergence(mag));
    }
    let x = swap_halves(1);
    let eye = CMat::identity(2, 2);
    let s = (&eye + &x * &bl.r_hh) / C64::new((1.0 - mag * mag).sqrt(), 0.0);
    let d = guarded_inverse(&(&eye - &x * &bl.r_hh), "I - X R_hh")? * &x * &bl.y_h;
    let zeta = C64::from_polar(mag.atanh(), b11.arg());
    Ok(GateParams { b11, s, d: d.clone(), zeta, beta: d[1] })
}

/// Matrices and vectors shared by the probability, coefficient and
/// Wigner formulas.
#[derive(Debug, Clone)]
pub struct CoreQuantities {
    /// `R_dd − R_dh (I + X R_hh)^{-1} X R_hd`.
    pub a: CMat,
    /// `A + R_dh X R_hd / (1 − |b11|²)`.
    pub c: CMat,
    /// `y_d + R_dh (I − X R_hh)^{-1} X y_h`.
    pub y: CVec,
    /// `R_dd + R_dh (I − X R_hh)^{-1} X R_hd`.
    pub a_p: CMat,
    /// `y_d + R_dh d`.
    pub z_p: CVec,
    pub kappa: Vec<C64>,
    pub mu: Vec<C64>,
    pub f: CMat,
    /// First detected position whose `κ` vanishes, if any.
    pub degenerate: Option<usize>,
}

impl CoreQuantities {
    /// `F ⊕ F*` on the `(σ, ω)` layout.
    pub fn ratio_matrix(&self) -> CMat {
        let k = self.f.nrows();
        let mut m = CMat::zeros(2 * k, 2 * k);
        m.view_mut((0, 0), (k, k)).copy_from(&self.f);
        m.view_mut((k, k), (k, k)).copy_from(&self.f.map(|z| z.conj()));
        m
    }

    /// `(μ*, μ)`.
    pub fn ratio_linear(&self) -> CVec {
        let k = self.mu.len();
        CVec::from_fn(2 * k, |i, _| if i < k { self.mu[i].conj() } else { self.mu[i - k] })
    }
}

pub fn core_quantities(rf: &ReducedForm, gp: &GateParams) -> Result<CoreQuantities> {
    let bl = blocks_of(rf)?;
    let k = bl.detected.len();
    let x = swap_halves(1);
    let eye = CMat::identity(2, 2);
    let mag2 = gp.b11.norm_sqr();
    let plus = guarded_inverse(&(&eye + &x * &bl.r_hh), "I + X R_hh")?;
    let minus = guarded_inverse(&(&eye - &x * &bl.r_hh), "I - X R_hh")?;
    let a = &bl.r_dd - &bl.r_dh * &plus * &x * &bl.r_hd;
    let c = &a + &bl.r_dh * &x * &bl.r_hd / C64::new(1.0 - mag2, 0.0);
    let y = &bl.y_d + &bl.r_dh * &minus * &x * &bl.y_h;
    let a_p = &bl.r_dd + &bl.r_dh * &minus * &x * &bl.r_hd;
    let z_p = &bl.y_d + &bl.r_dh * &gp.d;

    let scale = (1.0 - mag2).sqrt();
    let kappa: Vec<C64> = (0..k).map(|j| bl.r_hd[(0, j)] / scale).collect();
    let degenerate = kappa.iter().position(|z| z.norm() < KAPPA_TOL);
    let (mu, f) = if degenerate.is_some() {
        (vec![C64::new(f64::NAN, 0.0); k], CMat::from_element(k, k, C64::new(f64::NAN, 0.0)))
    } else {
        let mu = (0..k).map(|j| y[k + j] / kappa[j].conj()).collect();
        let f = CMat::from_fn(k, k, |i, j| gp.b11.conj() + bl.r_dd[(i, j)] / (kappa[i] * kappa[j]));
        (mu, f)
    };
    Ok(CoreQuantities { a, c, y, a_p, z_p, kappa, mu, f, degenerate })
}

/// `det(I − X R_hh)^{-1/2} exp(½ y_hᵀ d)` for any number of heralded modes,
/// together with `A_p` and `z_p`.
pub(crate) fn probability_parts(bl: &Blocks) -> Result<(C64, CMat, CVec)> {
    let m = bl.heralded.len();
    let x = swap_halves(m);
    let eye = CMat::identity(2 * m, 2 * m);
    let base = &eye - &x * &bl.r_hh;
    let minus = guarded_inverse(&base, "I - X R_hh")?;
    let d = &minus * &x * &bl.y_h;
    let a_p = &bl.r_dd + &bl.r_dh * &minus * &x * &bl.r_hd;
    let z_p = &bl.y_d + &bl.r_dh * &d;
    let quad = (bl.y_h.transpose() * &d)[(0, 0)];
    let pref = ONE / base.determinant().sqrt() * (0.5 * quad).exp();
    Ok((pref, a_p, z_p))
}
