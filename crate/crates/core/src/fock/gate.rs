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

//! Number-basis action of the single-mode gate `D(β) S(ζ)`.
//!
//! With `L = D S a† S† D†` the gate maps `|n⟩` to `L^n / √n! · D S|0⟩`, and
//! `L = cosh r · a† − e^{−iφ} sinh r · a + (e^{−iφ} sinh r · β − cosh r · β*)`.
//! `D S|0⟩` itself follows a two-term recurrence. Vectors are built on a
//! padded grid so that every entry returned is exact up to rounding.

use crate::linalg::{CMat, C64, ZERO};

/// `⟨m| D(β) S(ζ) |0⟩` for `m < len`.
pub fn squeezed_coherent(zeta: C64, beta: C64, len: usize) -> Vec<C64> {
    let r = zeta.norm();
    let t = C64::from_polar(r.tanh(), zeta.arg());
    let g = beta - t * beta.conj();
    let c0 = C64::new(r.cosh().powf(-0.5), 0.0) * (-0.5 * beta.norm_sqr() + 0.5 * t * beta.conj() * beta.conj()).exp();
    let mut a = vec![ZERO; len];
    if len == 0 {
        return a;
    }
    a[0] = c0;
    for m in 1..len {
        let mut v = g * a[m - 1];
        if m >= 2 {
            v += ((m - 1) as f64).sqrt() * t * a[m - 2];
        }
        a[m] = v / (m as f64).sqrt();
    }
    a
}

struct Ladder {
    c: f64,
    s: C64,
    w: C64,
}

impl Ladder {
    fn new(zeta: C64, beta: C64) -> Self {
        let r = zeta.norm();
        let s = C64::from_polar(r.sinh(), -zeta.arg());
        let c = r.cosh();
        Ladder { c, s, w: s * beta - c * beta.conj() }
    }

    /// `out = L v`, dropping the top entry.
    fn apply(&self, v: &[C64]) -> Vec<C64> {
        let len = v.len();
        let mut out = vec![ZERO; len];
        for m in 0..len {
            let mut x = self.w * v[m];
            if m >= 1 {
                x += self.c * (m as f64).sqrt() * v[m - 1];
            }
            if m + 1 < len {
                x -= self.s * ((m + 1) as f64).sqrt() * v[m + 1];
            }
            out[m] = x;
        }
        out
    }
}

/// `D(β) S(ζ) Σ_n c_n |n⟩` truncated to `cutoff` entries.
pub fn gate_vector(coeffs: &[C64], zeta: C64, beta: C64, cutoff: usize) -> Vec<C64> {
    let pad = coeffs.len() + 2;
    let ladder = Ladder::new(zeta, beta);
    let mut col = squeezed_coherent(zeta, beta, cutoff + pad);
    let mut out = vec![ZERO; cutoff];
    for (n, &cn) in coeffs.iter().enumerate() {
        if n > 0 {
            col = ladder.apply(&col);
            let s = 1.0 / (n as f64).sqrt();
            col.iter_mut().for_each(|z| *z *= s);
        }
        if cn != ZERO {
            for m in 0..cutoff {
                out[m] += cn * col[m];
            }
        }
    }
    out
}

/// Matrix `⟨m| D(β) S(ζ) |n⟩` for `m < rows`, `n < cols`.
pub fn gate_matrix(zeta: C64, beta: C64, rows: usize, cols: usize) -> CMat {
    let ladder = Ladder::new(zeta, beta);
    let mut col = squeezed_coherent(zeta, beta, rows + cols + 2);
    let mut out = CMat::zeros(rows, cols);
    for n in 0..cols {
        if n > 0 {
            col = ladder.apply(&col);
            let s = 1.0 / (n as f64).sqrt();
            col.iter_mut().for_each(|z| *z *= s);
        }
        for m in 0..rows {
            out[(m, n)] = col[m];
        }
    }
    out
}

/// `S(ζ)† D(β)† ψ` for a single-mode vector `ψ`, truncated to `ψ.len()`.
///
/// Also returns the norm lost to truncation, `‖ψ‖² − ‖result‖²`.
pub fn strip_vector(psi: &[C64], zeta: C64, beta: C64) -> (Vec<C64>, f64) {
    let k = psi.len();
    // rows beyond k would multiply unknown amplitudes, so only k are used
    let g = gate_matrix(zeta, beta, k, k);
    let mut out = vec![ZERO; k];
    for n in 0..k {
        let mut acc = ZERO;
        for m in 0..k {
            acc += g[(m, n)].conj() * psi[m];
        }
        out[n] = acc;
    }
    let before: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    let after: f64 = out.iter().map(|z| z.norm_sqr()).sum();
    (out, (before - after).max(0.0))
}
