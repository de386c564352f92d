use crate::algebra::{c, CMat4, CVec4, Mat4, Vec4, C64, ZERO};
use crate::geometry::FrameJet;
use serde::Serialize;
use std::f64::consts::FRAC_1_SQRT_2;

/// Legs of the null tetrad, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Leg {
    L = 0,
    N = 1,
    M = 2,
    MBar = 3,
}

impl Leg {
    pub const ALL: [Leg; 4] = [Leg::L, Leg::N, Leg::M, Leg::MBar];
}

/// Frame components of the null legs: `v = v^a e_(a)`.
pub const NULL_FRAME_COMPONENTS: [[C64; 4]; 4] = {
    const S: f64 = FRAC_1_SQRT_2;
    const Z: C64 = C64 { re: 0.0, im: 0.0 };
    const P: C64 = C64 { re: S, im: 0.0 };
    const N: C64 = C64 { re: -S, im: 0.0 };
    [
        [P, Z, Z, P],
        [P, Z, Z, N],
        [Z, P, C64 { re: 0.0, im: -S }, Z],
        [Z, P, C64 { re: 0.0, im: S }, Z],
    ]
};

/// Null tetrad `l = (e0+e3)/sqrt2`, `n = (e0-e3)/sqrt2`, `m = (e1-i e2)/sqrt2`,
/// `m-bar = conj(m)` with partials and covariant derivatives.
#[derive(Debug, Clone, Serialize)]
pub struct NullFrameJet {
    pub point: Vec4,
    pub g: Mat4,
    /// `up[leg][alpha] = v^alpha`
    pub up: [CVec4; 4],
    /// `down[leg][alpha] = v_alpha`
    pub down: [CVec4; 4],
    /// `up_partials[leg][beta][alpha] = d_beta v^alpha`
    pub up_partials: [CMat4; 4],
    /// `cov_down[leg][beta][alpha] = v_{beta;alpha}`
    pub cov_down: [CMat4; 4],
}

pub fn null_frame(frame: &FrameJet) -> NullFrameJet {
    let mut nf = NullFrameJet {
        point: frame.point,
        g: frame.g,
        up: [[ZERO; 4]; 4],
        down: [[ZERO; 4]; 4],
        up_partials: [[[ZERO; 4]; 4]; 4],
        cov_down: [[[ZERO; 4]; 4]; 4],
    };
    for (leg, comps) in NULL_FRAME_COMPONENTS.iter().enumerate() {
        for (a, &k) in comps.iter().enumerate() {
            if k == ZERO {
                continue;
            }
            for al in 0..4 {
                nf.up[leg][al] += k * frame.e_up[a][al];
                nf.down[leg][al] += k * frame.e_down[a][al];
                for be in 0..4 {
                    nf.up_partials[leg][be][al] += k * frame.e_up_partials[be][a][al];
                    nf.cov_down[leg][be][al] += k * frame.cov_deriv_down[a][be][al];
                }
            }
        }
    }
    nf
}

impl NullFrameJet {
    pub fn l(&self) -> &CVec4 {
        &self.up[Leg::L as usize]
    }
    pub fn n(&self) -> &CVec4 {
        &self.up[Leg::N as usize]
    }
    pub fn m(&self) -> &CVec4 {
        &self.up[Leg::M as usize]
    }
    pub fn m_bar(&self) -> &CVec4 {
        &self.up[Leg::MBar as usize]
    }

    /// The legs scaled by `sqrt2`, i.e. the entries of `sigma^alpha(x)`.
    pub fn sigma_entries(&self) -> [CVec4; 4] {
        self.up.map(|v| v.map(|z| z * std::f64::consts::SQRT_2))
    }

    /// `g_alphabeta u^alpha v^beta` (no conjugation).
    pub fn dot(&self, u: &CVec4, v: &CVec4) -> C64 {
        let mut s = ZERO;
        for al in 0..4 {
            for be in 0..4 {
                s += u[al] * v[be] * self.g[al][be];
            }
        }
        s
    }

    /// `x_{beta;alpha} y^beta z^alpha`.
    pub fn contract(&self, x: Leg, y: Leg, z: Leg) -> C64 {
        let cov = &self.cov_down[x as usize];
        let yv = &self.up[y as usize];
        let zv = &self.up[z as usize];
        let mut s = ZERO;
        for be in 0..4 {
            for al in 0..4 {
                s += cov[be][al] * yv[be] * zv[al];
            }
        }
        s
    }

    /// `v^beta x_{beta;alpha}` for fixed `alpha`.
    pub fn contract_first(&self, v: Leg, x: Leg, alpha: usize) -> C64 {
        (0..4)
            .map(|be| self.up[v as usize][be] * self.cov_down[x as usize][be][alpha])
            .sum()
    }

    /// Largest deviation from `l.n = 1`, `m.mbar = -1`, all other products 0,
    /// and `mbar = conj(m)`.
    pub fn normalization_residual(&self) -> f64 {
        let mut r = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                let expect = match (i, j) {
                    (0, 1) | (1, 0) => c(1.0, 0.0),
                    (2, 3) | (3, 2) => c(-1.0, 0.0),
                    _ => ZERO,
                };
                r = r.max((self.dot(&self.up[i], &self.up[j]) - expect).norm());
            }
        }
        for al in 0..4 {
            r = r.max((self.m()[al].conj() - self.m_bar()[al]).norm());
        }
        r
    }
}
