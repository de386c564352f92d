//! Fixed Lorentzian algebra: metric, Levi-Civita symbol, Pauli and Dirac
//! matrices, small complex matrices, dual numbers.

mod identities;
mod jet;
mod linalg;
mod mat2;
mod pauli;

pub use identities::{
    clifford_identity_residual, identity_residuals, pauli_trace_residual, Conventions,
    IdentityResiduals,
};
pub use jet::Jet;
pub use linalg::{condition_number, det4, inverse4, mat4_mul, transpose4};
pub use mat2::Mat2;
pub use pauli::{
    dirac_gamma, gamma5, pauli_eps, sigma, sigma_ab, sigma_bar, sigma_bar_down, sigma_down, CMat4Ext,
};

pub use num_complex::Complex64 as C64;

pub type Vec4 = [f64; 4];
pub type Mat4 = [[f64; 4]; 4];
pub type Tensor3 = [[[f64; 4]; 4]; 4];
pub type CVec4 = [C64; 4];
pub type CMat4 = [[C64; 4]; 4];

/// Diagonal of the Minkowski metric, signature (+,-,-,-).
pub const ETA_DIAG: Vec4 = [1.0, -1.0, -1.0, -1.0];

/// The Minkowski metric as a matrix.
pub const ETA: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
];

pub const I: C64 = C64 { re: 0.0, im: 1.0 };
pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

#[inline]
pub fn eta(a: usize, b: usize) -> f64 {
    if a == b {
        ETA_DIAG[a]
    } else {
        0.0
    }
}

/// Levi-Civita symbol with all indices up, `eps^{0123} = +1`.
pub fn levi_civita(a: usize, b: usize, c: usize, d: usize) -> f64 {
    let p = [a, b, c, d];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return 0.0;
            }
        }
    }
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `eps^{abc}_k`, last index lowered with the Minkowski metric.
#[inline]
pub fn levi_civita_last_down(a: usize, b: usize, c: usize, k: usize) -> f64 {
    levi_civita(a, b, c, k) * ETA_DIAG[k]
}

/// `eps_{abcd}`, all indices lowered (`eps_{0123} = -1`).
#[inline]
pub fn levi_civita_down(a: usize, b: usize, c: usize, d: usize) -> f64 {
    levi_civita(a, b, c, d) * ETA_DIAG[a] * ETA_DIAG[b] * ETA_DIAG[c] * ETA_DIAG[d]
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn zero_tensor3() -> Tensor3 {
    [[[0.0; 4]; 4]; 4]
}

pub fn max_abs_tensor3(t: &Tensor3) -> f64 {
    t.iter()
        .flatten()
        .flatten()
        .fold(0.0_f64, |m, x| m.max(x.abs()))
}

pub fn max_abs_diff_tensor3(a: &Tensor3, b: &Tensor3) -> f64 {
    let mut m = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                m = m.max((a[i][j][k] - b[i][j][k]).abs());
            }
        }
    }
    m
}

pub fn max_abs_diff4(a: &Vec4, b: &Vec4) -> f64 {
    (0..4).fold(0.0_f64, |m, i| m.max((a[i] - b[i]).abs()))
}
