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

//! Small dense complex linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Matrix inverses are refused above this condition number.
pub const MAX_CONDITION: f64 = 1e12;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// `X_{2n} = X_2 ⊗ I_n`: swaps the creation and annihilation halves.
pub fn swap_halves(n: usize) -> CMat {
    let mut x = CMat::zeros(2 * n, 2 * n);
    for k in 0..n {
        x[(k, n + k)] = ONE;
        x[(n + k, k)] = ONE;
    }
    x
}

/// Applies `X_{2n}` to a vector without building the matrix.
pub fn swap_vec(v: &CVec) -> CVec {
    let n = v.len() / 2;
    CVec::from_fn(v.len(), |i, _| if i < n { v[i + n] } else { v[i - n] })
}

pub fn condition_number(m: &CMat) -> f64 {
    if m.nrows() == 0 {
        return 1.0;
    }
    let sv = m.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Inverse guarded by [`MAX_CONDITION`].
pub fn guarded_inverse(m: &CMat, what: &'static str) -> Result<CMat> {
    let cond = condition_number(m);
    if !cond.is_finite() || cond > MAX_CONDITION {
        return Err(Error::IllConditioned { what, cond });
    }
    m.clone()
        .try_inverse()
        .ok_or(Error::IllConditioned { what, cond: f64::INFINITY })
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermiticity_error(m: &CMat) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn symmetry_error(m: &CMat) -> f64 {
    max_abs(&(m - m.transpose()))
}

pub fn unitarity_error(u: &CMat) -> f64 {
    let n = u.nrows();
    max_abs(&(u.adjoint() * u - CMat::identity(n, n)))
}

pub fn submatrix(m: &CMat, rows: &[usize], cols: &[usize]) -> CMat {
    CMat::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

pub fn subvector(v: &CVec, idx: &[usize]) -> CVec {
    CVec::from_fn(idx.len(), |i, _| v[idx[i]])
}

/// `sqrt(n!)` as a float.
pub fn sqrt_factorial(n: usize) -> f64 {
    (1..=n).fold(1.0_f64, |acc, k| acc * (k as f64).sqrt())
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0_f64, |acc, k| acc * k as f64)
}

/// Autonne–Takagi factorisation of a complex symmetric matrix,
/// `b = u · diag(s) · uᵀ` with `u` unitary and `s ≥ 0`.
pub fn takagi(b: &CMat) -> (CMat, Vec<f64>) {
    let n = b.nrows();
    if n == 0 {
        return (CMat::zeros(0, 0), vec![]);
    }
    let svd = b.clone().svd(true, true);
    let w = svd.u.expect("svd u");
    let vt = svd.v_t.expect("svd v_t");
    // (Vᴴ W̄)ᵀ is unitary and commutes with diag(s); its principal square
    // root rotates W onto the Takagi basis even for degenerate s.
    let m = (&vt * w.map(|z| z.conj())).transpose();
    let root = unitary_sqrt(&m);
    (w * root, svd.singular_values.iter().cloned().collect())
}

fn unitary_sqrt(m: &CMat) -> CMat {
    let (q, t) = m.clone().schur().unpack();
    let n = m.nrows();
    let d = CMat::from_fn(n, n, |i, j| if i == j { t[(i, i)].sqrt() } else { ZERO });
    &q * d * q.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_symmetric(n: usize, seed: u64) -> CMat {
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let a = CMat::from_fn(n, n, |_, _| C64::new(next(), next()));
        &a + a.transpose()
    }

    #[test]
    fn takagi_reconstructs() {
        for n in 1..5 {
            let b = random_symmetric(n, n as u64);
            let (u, s) = takagi(&b);
            assert!(unitarity_error(&u) < 1e-10);
            let d = CMat::from_fn(n, n, |i, j| if i == j { C64::new(s[i], 0.0) } else { ZERO });
            assert!(max_abs(&(&u * d * u.transpose() - &b)) < 1e-10);
        }
    }

    #[test]
    fn takagi_handles_degenerate_spectrum() {
        // zero diagonal with equal couplings: singular values repeat
        let mut b = CMat::zeros(3, 3);
        b[(0, 1)] = C64::new(0.3, 0.1);
        b[(1, 0)] = b[(0, 1)];
        let (u, s) = takagi(&b);
        let d = CMat::from_fn(3, 3, |i, j| if i == j { C64::new(s[i], 0.0) } else { ZERO });
        assert!(max_abs(&(&u * d * u.transpose() - &b)) < 1e-10);
    }

    #[test]
    fn guarded_inverse_refuses_singular() {
        let m = CMat::from_element(2, 2, ONE);
        assert!(matches!(guarded_inverse(&m, "m"), Err(Error::IllConditioned { .. })));
    }
}
