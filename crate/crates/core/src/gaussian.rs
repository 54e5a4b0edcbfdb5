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

//! Pure multimode Gaussian states built from squeezers, displacements and a
//! linear interferometer.
//!
//! Moments use the coherent-basis operator vector
//! `ξ = (a₁†, …, a_N†, a₁, …, a_N)`: all creation operators first, then all
//! annihilation operators. With this ordering the covariance is
//! `V_jk = ½⟨{ξ_j, ξ_k†}⟩ − ⟨ξ_j⟩⟨ξ_k†⟩`, the vacuum has `V = I/2`, and the
//! swap `X_{2N} = X₂ ⊗ I_N` exchanges the two halves.
//!
//! Conventions used throughout the crate:
//!
//! * squeezing `S(ζ) = exp[½(ζ a†² − ζ* a²)]`, so `S(r)|0⟩` has positive
//!   `|2⟩` amplitude for `r > 0`;
//! * each input mode is prepared as `D(α) S(ζ) |0⟩`;
//! * the interferometer maps `a_i† → Σ_j U_ji a_j†`; a two-mode rotation
//!   `exp[θ(a_i a_j† − a_i† a_j)]` has `U_ii = U_jj = cos θ`,
//!   `U_ji = sin θ`, `U_ij = −sin θ`.
//!
//! Under these conventions the pure state is
//! `|ψ⟩ = c₀ exp(½ a†ᵀ B a† + gᵀ a†)|0⟩` with `B = U diag(e^{iφ} tanh r) Uᵀ`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{
    guarded_inverse, hermiticity_error, max_abs, swap_halves, swap_vec, symmetry_error,
    unitarity_error, CMat, CVec, C64, ONE, ZERO,
};

pub const DEFAULT_R_MAX: f64 = 2.3;
pub const HERMITIAN_TOL: f64 = 1e-10;
pub const UNITARY_TOL: f64 = 1e-10;
pub const PURITY_TOL: f64 = 1e-8;

/// Covariance matrix and displacement vector of an N-mode Gaussian state.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    num_modes: usize,
    cov: CMat,
    disp: CVec,
}

impl GaussianState {
    /// Builds a state after checking the structural invariants.
    pub fn new(cov: CMat, disp: CVec) -> Result<Self> {
        let dim = cov.nrows();
        if dim == 0 || dim % 2 != 0 || cov.ncols() != dim || disp.len() != dim {
            return Err(Error::Invalid(format!(
                "covariance {}x{} and displacement {} do not describe a state",
                cov.nrows(),
                cov.ncols(),
                disp.len()
            )));
        }
        let state = GaussianState { num_modes: dim / 2, cov, disp };
        state.validate()?;
        Ok(state)
    }

    pub fn vacuum(num_modes: usize) -> Self {
        let dim = 2 * num_modes;
        GaussianState {
            num_modes,
            cov: CMat::identity(dim, dim) * C64::new(0.5, 0.0),
            disp: CVec::zeros(dim),
        }
    }

    pub fn num_modes(&self) -> usize {
        self.num_modes
    }

    pub fn cov(&self) -> &CMat {
        &self.cov
    }

    pub fn disp(&self) -> &CVec {
        &self.disp
    }

    /// Checks Hermiticity, the conjugate-swap symmetry and invertibility of
    /// `2V + I`.
    pub fn validate(&self) -> Result<()> {
        let herm = hermiticity_error(&self.cov);
        if herm > HERMITIAN_TOL {
            return Err(Error::Invalid(format!("covariance not Hermitian ({herm:.3e})")));
        }
        let x = swap_halves(self.num_modes);
        let swap = max_abs(&(&x * self.cov.map(|z| z.conj()) * &x - &self.cov));
        if swap > HERMITIAN_TOL {
            return Err(Error::Invalid(format!("covariance breaks conjugate-swap symmetry ({swap:.3e})")));
        }
        let dswap = (swap_vec(&self.disp.map(|z| z.conj())) - &self.disp).camax();
        if dswap > HERMITIAN_TOL {
            return Err(Error::Invalid(format!("displacement breaks conjugate-swap symmetry ({dswap:.3e})")));
        }
        guarded_inverse(&self.two_v_plus_i(), "2V + I")?;
        Ok(())
    }

    pub(crate) fn two_v_plus_i(&self) -> CMat {
        let dim = 2 * self.num_modes;
        &self.cov * C64::new(2.0, 0.0) + CMat::identity(dim, dim)
    }

    pub fn is_pure(&self) -> bool {
        (purity(self) - 1.0).abs() < PURITY_TOL
    }

    /// Mean photon number of one mode, `⟨a†a⟩`.
    pub fn mean_photons(&self, mode: usize) -> f64 {
        let n = self.num_modes;
        (self.cov[(mode, mode)].re - 0.5) + self.disp[n + mode].norm_sqr()
    }
}

/// `1/sqrt(det 2V)`; equals one exactly for pure states.
pub fn purity(state: &GaussianState) -> f64 {
    let det = (&state.cov * C64::new(2.0, 0.0)).determinant();
    1.0 / det.re.sqrt()
}

/// Reorders modes: mode `i` of the result is mode `perm[i]` of the input.
pub fn relabel_modes(state: &GaussianState, perm: &[usize]) -> Result<GaussianState> {
    let n = state.num_modes;
    check_permutation(perm, n)?;
    let idx: Vec<usize> = perm.iter().cloned().chain(perm.iter().map(|&p| p + n)).collect();
    Ok(GaussianState {
        num_modes: n,
        cov: CMat::from_fn(2 * n, 2 * n, |i, j| state.cov[(idx[i], idx[j])]),
        disp: CVec::from_fn(2 * n, |i, _| state.disp[idx[i]]),
    })
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::BadPermutation(format!("length {} for {} modes", perm.len(), n)));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::BadPermutation(format!("{perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// A two-mode rotation preceded by a phase shift on mode `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshRotation {
    pub i: usize,
    pub j: usize,
    pub theta: f64,
    pub phi: f64,
}

impl MeshRotation {
    pub fn matrix(&self, n: usize) -> CMat {
        let mut t = CMat::identity(n, n);
        let (s, c) = self.theta.sin_cos();
        let ph = C64::from_polar(1.0, self.phi);
        t[(self.i, self.i)] = ph * c;
        t[(self.j, self.i)] = ph * s;
        t[(self.i, self.j)] = C64::new(-s, 0.0);
        t[(self.j, self.j)] = C64::new(c, 0.0);
        t
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Interferometer {
    Unitary(CMat),
    /// Rotations applied in list order, followed by per-mode output phases.
    Mesh { rotations: Vec<MeshRotation>, phases: Vec<f64> },
}

impl Interferometer {
    pub fn identity() -> Self {
        Interferometer::Mesh { rotations: vec![], phases: vec![] }
    }

    pub fn unitary(&self, n: usize) -> Result<CMat> {
        match self {
            Interferometer::Unitary(u) => {
                if u.nrows() != n || u.ncols() != n {
                    return Err(Error::Invalid(format!("unitary is {}x{}, expected {n}x{n}", u.nrows(), u.ncols())));
                }
                let err = unitarity_error(u);
                if err > UNITARY_TOL {
                    return Err(Error::NonUnitary(err));
                }
                Ok(u.clone())
            }
            Interferometer::Mesh { rotations, phases } => {
                if !phases.is_empty() && phases.len() != n {
                    return Err(Error::Invalid(format!("{} output phases for {n} modes", phases.len())));
                }
                let mut u = CMat::identity(n, n);
                for rot in rotations {
                    if rot.i >= n || rot.j >= n || rot.i == rot.j {
                        return Err(Error::Invalid(format!("rotation on modes ({}, {})", rot.i, rot.j)));
                    }
                    u = rot.matrix(n) * u;
                }
                for (k, &p) in phases.iter().enumerate() {
                    let ph = C64::from_polar(1.0, p);
                    for c in 0..n {
                        u[(k, c)] *= ph;
                    }
                }
                Ok(u)
            }
        }
    }
}

/// Squeezing, displacement and interferometer settings of a circuit that
/// prepares a pure Gaussian state.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitParams {
    pub squeeze_mag: Vec<f64>,
    pub squeeze_phase: Vec<f64>,
    pub displacements: Vec<C64>,
    pub interferometer: Interferometer,
    pub r_max: f64,
}

impl CircuitParams {
    pub fn vacuum(num_modes: usize) -> Self {
        CircuitParams {
            squeeze_mag: vec![0.0; num_modes],
            squeeze_phase: vec![0.0; num_modes],
            displacements: vec![ZERO; num_modes],
            interferometer: Interferometer::identity(),
            r_max: DEFAULT_R_MAX,
        }
    }

    pub fn num_modes(&self) -> usize {
        self.squeeze_mag.len()
    }

    /// Sets a complex squeezing `r e^{iφ}` on one mode.
    pub fn with_squeezing(mut self, mode: usize, r: f64, phase: f64) -> Self {
        self.squeeze_mag[mode] = r;
        self.squeeze_phase[mode] = phase;
        self
    }

    /// Real signed squeezing; negative values become phase π.
    pub fn with_real_squeezing(self, mode: usize, value: f64) -> Self {
        let phase = if value < 0.0 { std::f64::consts::PI } else { 0.0 };
        self.with_squeezing(mode, value.abs(), phase)
    }

    pub fn with_displacement(mut self, mode: usize, alpha: C64) -> Self {
        self.displacements[mode] = alpha;
        self
    }

    /// Appends a rotation to a mesh interferometer.
    pub fn with_rotation(mut self, i: usize, j: usize, theta: f64, phi: f64) -> Self {
        match &mut self.interferometer {
            Interferometer::Mesh { rotations, .. } => rotations.push(MeshRotation { i, j, theta, phi }),
            Interferometer::Unitary(_) => panic!("with_rotation on an explicit unitary"),
        }
        self
    }

    pub fn with_unitary(mut self, u: CMat) -> Self {
        self.interferometer = Interferometer::Unitary(u);
        self
    }

    pub fn validate(&self) -> Result<CMat> {
        let n = self.num_modes();
        if n == 0 {
            return Err(Error::Invalid("circuit has no modes".into()));
        }
        if self.squeeze_phase.len() != n || self.displacements.len() != n {
            return Err(Error::Invalid("squeezing, phases and displacements differ in length".into()));
        }
        for (mode, &r) in self.squeeze_mag.iter().enumerate() {
            if !r.is_finite() || r < 0.0 {
                return Err(Error::Invalid(format!("squeezing magnitude {r} in mode {mode}")));
            }
            if r > self.r_max {
                return Err(Error::SqueezingTooLarge { mode, value: r, bound: self.r_max });
            }
        }
        if self.displacements.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Invalid("non-finite displacement".into()));
        }
        self.interferometer.unitary(n)
    }

    /// Per-mode `e^{iφ} tanh r`.
    fn squeeze_factors(&self) -> Vec<C64> {
        self.squeeze_mag
            .iter()
            .zip(&self.squeeze_phase)
            .map(|(&r, &p)| C64::from_polar(r.tanh(), p))
            .collect()
    }

    /// Random circuit: uniform squeezing in `[0, r_max]` with random phases,
    /// complex Gaussian displacements of scale `disp`, and a full mesh of
    /// random rotations with random output phases.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, modes: usize, r_max: f64, disp: f64) -> Self {
        let mut p = CircuitParams::vacuum(modes);
        for k in 0..modes {
            p.squeeze_mag[k] = rng.random_range(0.0..=r_max);
            p.squeeze_phase[k] = rng.random_range(-PI..PI);
            p.displacements[k] = C64::new(disp * rng.sample::<f64, _>(StandardNormal), disp * rng.sample::<f64, _>(StandardNormal));
        }
        let mut rotations = Vec::new();
        for i in 0..modes {
            for j in (i + 1)..modes {
                rotations.push(MeshRotation { i, j, theta: rng.random_range(0.0..PI), phi: rng.random_range(-PI..PI) });
            }
        }
        let phases = (0..modes).map(|_| rng.random_range(-PI..PI)).collect();
        p.interferometer = Interferometer::Mesh { rotations, phases };
        p
    }

    /// Ket-form data `(B, g, ⟨0|ψ⟩)` computed directly from the circuit.
    pub fn ket_form(&self) -> Result<KetForm> {
        let u = self.validate()?;
        let n = self.num_modes();
        let t = self.squeeze_factors();
        let mut vac = ONE;
        let mut g_in = CVec::zeros(n);
        for k in 0..n {
            let a = self.displacements[k];
            g_in[k] = a - t[k] * a.conj();
            vac *= C64::new(self.squeeze_mag[k].cosh().powf(-0.5), 0.0)
                * (-0.5 * a.norm_sqr() + 0.5 * t[k] * a.conj() * a.conj()).exp();
        }
        let diag = CMat::from_diagonal(&CVec::from_vec(t));
        Ok(KetForm { b: &u * diag * u.transpose(), g: &u * g_in, vacuum_amplitude: vac })
    }
}

/// `|ψ⟩ = vacuum_amplitude · exp(½ a†ᵀ b a† + gᵀ a†)|0⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct KetForm {
    pub b: CMat,
    pub g: CVec,
    pub vacuum_amplitude: C64,
}

impl KetForm {
    /// Recovers the ket form of a pure state from its moments. The global
    /// phase is lost; the vacuum amplitude is returned real and positive.
    pub fn from_state(state: &GaussianState) -> Result<KetForm> {
        let n = state.num_modes();
        let dim = 2 * n;
        let inv = guarded_inverse(&state.two_v_plus_i(), "2V + I")?;
        let x = swap_halves(n);
        let two = C64::new(2.0, 0.0);
        let r = &x * (state.cov() * two - CMat::identity(dim, dim)) * &inv;
        let y = &x * &inv * state.disp() * two;
        let p0 = vacuum_probability(state, &inv);
        Ok(KetForm {
            b: r.view((0, 0), (n, n)).into_owned(),
            g: y.rows(0, n).into_owned(),
            vacuum_amplitude: C64::new(p0.max(0.0).sqrt(), 0.0),
        })
    }
}

/// `|⟨0|ψ⟩|²`, i.e. `2^N det(2V+I)^{-1/2} exp(−½ Qᵀ ỹ)`.
pub(crate) fn vacuum_probability(state: &GaussianState, inv_two_v_plus_i: &CMat) -> f64 {
    let n = state.num_modes();
    let x = swap_halves(n);
    let y = &x * inv_two_v_plus_i * state.disp() * C64::new(2.0, 0.0);
    let det = state.two_v_plus_i().determinant();
    let quad = state.disp().transpose() * y;
    let p = C64::new(2f64.powi(n as i32), 0.0) / det.sqrt() * (-0.5 * quad[(0, 0)]).exp();
    p.re
}

/// Symmetric matrix `B = U diag(tanh r_j) Uᵀ` (squeezing phases absorbed).
#[derive(Debug, Clone, PartialEq)]
pub struct BMatrix {
    pub entries: CMat,
}

impl BMatrix {
    pub fn validate(&self) -> Result<()> {
        let sym = symmetry_error(&self.entries);
        if sym > HERMITIAN_TOL {
            return Err(Error::Invalid(format!("B not symmetric ({sym:.3e})")));
        }
        let smax = self.entries.clone().singular_values().iter().cloned().fold(0.0, f64::max);
        if smax >= 1.0 {
            return Err(Error::Invalid(format!("B has singular value {smax} >= 1")));
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[(i, j)]
    }
}

/// Pure state produced by the circuit: moments of `U D(α) S(ζ)|0⟩`.
pub fn make_state(params: &CircuitParams) -> Result<GaussianState> {
    let u = params.validate()?;
    let n = params.num_modes();
    let uc = u.map(|z| z.conj());
    let c = CMat::from_diagonal(&CVec::from_fn(n, |k, _| C64::new(params.squeeze_mag[k].cosh(), 0.0)));
    let s = CMat::from_diagonal(&CVec::from_fn(n, |k, _| {
        C64::from_polar(params.squeeze_mag[k].sinh(), params.squeeze_phase[k])
    }));
    let sc = s.map(|z| z.conj());
    // Heisenberg map of (a†, a) onto the input vacuum operators.
    let mut t = CMat::zeros(2 * n, 2 * n);
    t.view_mut((0, 0), (n, n)).copy_from(&(&uc * &c));
    t.view_mut((0, n), (n, n)).copy_from(&(&uc * &sc));
    t.view_mut((n, 0), (n, n)).copy_from(&(&u * &s));
    t.view_mut((n, n), (n, n)).copy_from(&(&u * &c));
    let mut cov = &t * t.adjoint() * C64::new(0.5, 0.0);
    // exact Hermitian symmetrisation
    cov = (&cov + cov.adjoint()) * C64::new(0.5, 0.0);
    let alpha = CVec::from_vec(params.displacements.clone());
    let ua = &u * alpha;
    let disp = CVec::from_fn(2 * n, |i, _| if i < n { ua[i].conj() } else { ua[i - n] });
    GaussianState::new(cov, disp)
}

/// `B = U diag(e^{iφ_j} tanh r_j) Uᵀ`, equivalently `U' diag(tanh r_j) U'ᵀ`
/// with the squeezing phases folded into `U' = U diag(e^{iφ_j/2})`.
pub fn b_matrix(params: &CircuitParams) -> Result<BMatrix> {
    let u = params.validate()?;
    let n = params.num_modes();
    let absorbed = &u * CMat::from_diagonal(&CVec::from_fn(n, |k, _| C64::from_polar(1.0, 0.5 * params.squeeze_phase[k])));
    let tanh = CMat::from_diagonal(&CVec::from_fn(n, |k, _| C64::new(params.squeeze_mag[k].tanh(), 0.0)));
    let entries = &absorbed * tanh * absorbed.transpose();
    Ok(BMatrix { entries: (&entries + entries.transpose()) * C64::new(0.5, 0.0) })
}

/// Permutes the modes of a circuit so that `make_state` commutes with
/// [`relabel_modes`].
pub fn relabel_circuit(params: &CircuitParams, perm: &[usize]) -> Result<CircuitParams> {
    let n = params.num_modes();
    check_permutation(perm, n)?;
    let u = params.validate()?;
    // new output mode i is old output mode perm[i]; inputs are untouched
    let pu = DMatrix::from_fn(n, n, |i, j| u[(perm[i], j)]);
    Ok(CircuitParams { interferometer: Interferometer::Unitary(pu), ..params.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn vacuum_from_zero_params() {
        let s = make_state(&CircuitParams::vacuum(3)).unwrap();
        assert_eq!(s, GaussianState::vacuum(3));
        assert!((purity(&s) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_mode_squeezed_moments() {
        let r = 1.0;
        let s = make_state(&CircuitParams::vacuum(1).with_squeezing(0, r, 0.0)).unwrap();
        // V_11 = <a†a> + 1/2, V_12 = <a† a†> = sinh r cosh r for S(r) = exp[½(r a†² − r a²)]
        assert!(close(s.cov()[(0, 0)], C64::new(r.sinh().powi(2) + 0.5, 0.0), 1e-12));
        assert!(close(s.cov()[(0, 1)], C64::new(r.sinh() * r.cosh(), 0.0), 1e-12));
        assert!(close(s.cov()[(1, 0)], C64::new(r.sinh() * r.cosh(), 0.0), 1e-12));
        assert!((s.mean_photons(0) - r.sinh().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn two_mode_squeezed_vacuum_moments() {
        // S(r) ⊗ S(−r) through a 50:50 rotation gives a TMSV
        let r = 0.7;
        let p = CircuitParams::vacuum(2)
            .with_real_squeezing(0, r)
            .with_real_squeezing(1, -r)
            .with_rotation(0, 1, std::f64::consts::FRAC_PI_4, 0.0);
        let s = make_state(&p).unwrap();
        let (sh, ch) = (r.sinh(), r.cosh());
        assert!((s.mean_photons(0) - sh * sh).abs() < 1e-12);
        assert!((s.mean_photons(1) - sh * sh).abs() < 1e-12);
        // V[(N + 0, 1)] = <a1 (a2†)†> = <a1 a2>
        assert!(close(s.cov()[(2, 1)], C64::new(sh * ch, 0.0), 1e-12));
        assert!(close(s.cov()[(2, 0)], ZERO, 1e-12));
        let b = b_matrix(&p).unwrap();
        assert!(b.get(0, 0).norm() < 1e-12 && b.get(1, 1).norm() < 1e-12);
        assert!(close(b.get(0, 1), C64::new(r.tanh(), 0.0), 1e-12));
    }

    #[test]
    fn b_matrix_diagonal_and_zero() {
        let p = CircuitParams::vacuum(3).with_squeezing(0, 0.3, 0.0).with_squeezing(2, 1.1, 0.0);
        let b = b_matrix(&p).unwrap();
        assert!(close(b.get(0, 0), C64::new(0.3f64.tanh(), 0.0), 1e-14));
        assert!(close(b.get(2, 2), C64::new(1.1f64.tanh(), 0.0), 1e-14));
        assert!(b.get(1, 1).norm() < 1e-15);
        assert!(max_abs(&b_matrix(&CircuitParams::vacuum(2)).unwrap().entries) == 0.0);
        b.validate().unwrap();
    }

    #[test]
    fn rejects_bad_circuits() {
        let p = CircuitParams::vacuum(2).with_squeezing(0, 2.5, 0.0);
        assert!(matches!(make_state(&p), Err(Error::SqueezingTooLarge { .. })));
        let mut u = CMat::identity(2, 2);
        u[(0, 1)] = C64::new(0.1, 0.0);
        let p = CircuitParams::vacuum(2).with_unitary(u);
        assert!(matches!(make_state(&p), Err(Error::NonUnitary(_))));
    }

    #[test]
    fn relabel_identity_involution_and_swap() {
        let p = CircuitParams::vacuum(2).with_squeezing(0, 0.9, 0.2).with_squeezing(1, 0.1, 0.0);
        let s = make_state(&p).unwrap();
        assert_eq!(relabel_modes(&s, &[0, 1]).unwrap(), s);
        let sw = relabel_modes(&s, &[1, 0]).unwrap();
        assert_eq!(relabel_modes(&sw, &[1, 0]).unwrap(), s);
        assert!((sw.mean_photons(0) - s.mean_photons(1)).abs() < 1e-15);
        assert!((sw.mean_photons(1) - s.mean_photons(0)).abs() < 1e-15);
        assert!(relabel_modes(&s, &[0, 0]).is_err());
    }

    #[test]
    fn thermal_like_state_is_mixed() {
        let s = GaussianState::new(CMat::identity(2, 2), CVec::zeros(2)).unwrap();
        assert!((purity(&s) - 0.5).abs() < 1e-12);
        assert!(!s.is_pure());
    }

    #[test]
    fn ket_form_matches_moments() {
        let p = CircuitParams::vacuum(3)
            .with_squeezing(0, 0.5, 0.3)
            .with_squeezing(1, 0.2, -1.0)
            .with_squeezing(2, 0.8, 2.0)
            .with_displacement(0, C64::new(0.3, -0.2))
            .with_displacement(2, C64::new(-0.1, 0.4))
            .with_rotation(0, 1, 0.4, 0.7)
            .with_rotation(1, 2, 1.1, -0.3);
        let direct = p.ket_form().unwrap();
        let from_moments = KetForm::from_state(&make_state(&p).unwrap()).unwrap();
        assert!(max_abs(&(&direct.b - &from_moments.b)) < 1e-12);
        assert!((&direct.g - &from_moments.g).camax() < 1e-12);
        assert!((direct.vacuum_amplitude.norm() - from_moments.vacuum_amplitude.re).abs() < 1e-12);
        assert!(max_abs(&(&direct.b - &b_matrix(&p).unwrap().entries)) < 1e-12);
    }
}
