use super::spin::SpinCoefficientSet;
use crate::algebra::{CVec4, Vec4, C64, I, ZERO};
use crate::geometry::FrameJet;
use crate::ricci::RicciAtPoint;
use serde::Serialize;
use std::f64::consts::SQRT_2;

/// `(v0+v3, v0-v3, v1-i v2, v1+i v2)`.
pub fn hat(v: &Vec4) -> [C64; 4] {
    [
        C64::new(v[0] + v[3], 0.0),
        C64::new(v[0] - v[3], 0.0),
        C64::new(v[1], -v[2]),
        C64::new(v[1], v[2]),
    ]
}

/// Hatted frame components of B (Dirac normalization), C, the potential and
/// the frame vectors themselves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HatComponents {
    pub b_hat: [C64; 4],
    pub c_hat: [C64; 4],
    pub a_hat: [C64; 4],
    /// `e_hat[k][alpha]`
    pub e_hat: [CVec4; 4],
}

/// `em` holds coordinate components `A_alpha`; it defaults to zero.
pub fn hat_components(r: &RicciAtPoint, frame: &FrameJet, em: Option<&Vec4>) -> HatComponents {
    let a_frame = em.map(|a| frame.frame_components(a)).unwrap_or([0.0; 4]);
    let mut e_hat = [[ZERO; 4]; 4];
    for al in 0..4 {
        let col = [
            frame.e_up[0][al],
            frame.e_up[1][al],
            frame.e_up[2][al],
            frame.e_up[3][al],
        ];
        let h = hat(&col);
        for k in 0..4 {
            e_hat[k][al] = h[k];
        }
    }
    HatComponents {
        b_hat: hat(&r.b_dirac),
        c_hat: hat(&r.c),
        a_hat: hat(&a_frame),
        e_hat,
    }
}

impl HatComponents {
    /// Imaginary residue on the components that must be real, and the
    /// conjugation pairing of the last two.
    pub fn reality_residual(&self) -> f64 {
        let mut m = 0.0_f64;
        for v in [&self.b_hat, &self.c_hat, &self.a_hat] {
            m = m.max(v[0].im.abs()).max(v[1].im.abs());
            m = m.max((v[3] - v[2].conj()).norm());
        }
        m
    }
}

/// The eight differences `B_k +- i C_k - sqrt2 (spin-coefficient combination)`,
/// ordered `(k=0,+), (k=0,-), (k=1,+), ...`.
pub fn bridge_relations(h: &HatComponents, s: &SpinCoefficientSet) -> [C64; 8] {
    let x0 = s.l[2] - s.m[0];
    let x1 = s.m_bar[1] - s.n[2];
    let x2 = s.l[1] - s.m[2];
    let x3 = s.m_bar[2] - s.n[0];
    let b = &h.b_hat;
    let c = &h.c_hat;
    [
        b[0] + I * c[0] - SQRT_2 * x0,
        b[0] - I * c[0] - SQRT_2 * x0.conj(),
        b[1] + I * c[1] - SQRT_2 * x1,
        b[1] - I * c[1] - SQRT_2 * x1.conj(),
        b[2] + I * c[2] - SQRT_2 * x2,
        b[2] - I * c[2] - SQRT_2 * x3.conj(),
        b[3] + I * c[3] - SQRT_2 * x3,
        b[3] - I * c[3] - SQRT_2 * x2.conj(),
    ]
}

/// Hatted B and C rebuilt from spin coefficients alone.
pub fn reassembled_hats(s: &SpinCoefficientSet) -> ([C64; 4], [C64; 4]) {
    let pairs = [
        (s.l[2] - s.m[0], s.l[2] - s.m[0]),
        (s.m_bar[1] - s.n[2], s.m_bar[1] - s.n[2]),
        (s.l[1] - s.m[2], s.m_bar[2] - s.n[0]),
        (s.m_bar[2] - s.n[0], s.l[1] - s.m[2]),
    ];
    let mut b = [ZERO; 4];
    let mut c = [ZERO; 4];
    for (k, (plus, minus)) in pairs.into_iter().enumerate() {
        b[k] = (plus + minus.conj()) * (SQRT_2 / 2.0);
        c[k] = (plus - minus.conj()) * (SQRT_2 / 2.0) / I;
    }
    (b, c)
}

/// Largest residual of the eight bridge relations and the reassembled forms.
pub fn bridge_residual(h: &HatComponents, s: &SpinCoefficientSet) -> f64 {
    let mut m = bridge_relations(h, s)
        .iter()
        .fold(0.0_f64, |m, z| m.max(z.norm()));
    let (b, c) = reassembled_hats(s);
    for k in 0..4 {
        m = m.max((b[k] - h.b_hat[k]).norm()).max((c[k] - h.c_hat[k]).norm());
    }
    m
}
