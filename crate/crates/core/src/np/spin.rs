use super::null_frame::{Leg, NullFrameJet, NULL_FRAME_COMPONENTS};
use crate::algebra::{Tensor3, C64, ZERO};
use serde::Serialize;

/// Factor between canonical spin coefficients and the spinor normalization
/// used by the gauge kernels and the Dirac operator tables.
pub const SPINOR_NORMALIZATION: f64 = -2.0 * std::f64::consts::SQRT_2;

/// The twelve spin coefficients `L_i, N_i, M_i, Mbar_i`, `i = 1,2,3`
/// (stored zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinCoefficientSet {
    pub l: [C64; 3],
    pub n: [C64; 3],
    pub m: [C64; 3],
    pub m_bar: [C64; 3],
}

/// Newman-Penrose letters; each is the conjugate of a spin coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NpLetters {
    pub kappa: C64,
    pub pi: C64,
    pub epsilon: C64,
    pub rho: C64,
    pub lambda: C64,
    pub alpha: C64,
    pub sigma: C64,
    pub mu: C64,
    pub beta: C64,
    pub tau: C64,
    pub nu: C64,
    pub gamma: C64,
}

impl SpinCoefficientSet {
    pub const NAMES: [&'static str; 12] = [
        "L1", "L2", "L3", "N1", "N2", "N3", "M1", "M2", "M3", "Mbar1", "Mbar2", "Mbar3",
    ];

    pub fn zero() -> Self {
        SpinCoefficientSet {
            l: [ZERO; 3],
            n: [ZERO; 3],
            m: [ZERO; 3],
            m_bar: [ZERO; 3],
        }
    }

    /// Values in [`Self::NAMES`] order.
    pub fn to_array(&self) -> [C64; 12] {
        let mut out = [ZERO; 12];
        out[0..3].copy_from_slice(&self.l);
        out[3..6].copy_from_slice(&self.n);
        out[6..9].copy_from_slice(&self.m);
        out[9..12].copy_from_slice(&self.m_bar);
        out
    }

    pub fn from_array(v: &[C64; 12]) -> Self {
        SpinCoefficientSet {
            l: [v[0], v[1], v[2]],
            n: [v[3], v[4], v[5]],
            m: [v[6], v[7], v[8]],
            m_bar: [v[9], v[10], v[11]],
        }
    }

    /// The family selected by the final contraction leg.
    pub fn family(&self, z: Leg) -> &[C64; 3] {
        match z {
            Leg::L => &self.l,
            Leg::N => &self.n,
            Leg::M => &self.m,
            Leg::MBar => &self.m_bar,
        }
    }

    pub fn family_mut(&mut self, z: Leg) -> &mut [C64; 3] {
        match z {
            Leg::L => &mut self.l,
            Leg::N => &mut self.n,
            Leg::M => &mut self.m,
            Leg::MBar => &mut self.m_bar,
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_array(&self.to_array().map(|z| z * s))
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        let a = self.to_array();
        let b = o.to_array();
        (0..12).fold(0.0_f64, |m, i| m.max((a[i] - b[i]).norm()))
    }
}

/// Spin coefficients from covariant derivatives of the null legs.
pub fn spin_coefficients(nf: &NullFrameJet) -> SpinCoefficientSet {
    let mut s = SpinCoefficientSet::zero();
    for z in Leg::ALL {
        let f = s.family_mut(z);
        f[0] = nf.contract(Leg::L, Leg::MBar, z);
        f[1] = -nf.contract(Leg::N, Leg::M, z);
        f[2] = 0.5 * (nf.contract(Leg::L, Leg::N, z) + nf.contract(Leg::M, Leg::MBar, z));
    }
    s
}

/// Spin coefficients from rotation coefficients, using
/// `x_{beta;alpha} y^beta z^alpha = -x^a y^b z^c gamma_abc` with the constant
/// frame components of the null legs. Works for synthetic tensors too.
pub fn spin_coefficients_from_gamma(gamma: &Tensor3) -> SpinCoefficientSet {
    let k = &NULL_FRAME_COMPONENTS;
    let contract = |x: Leg, y: Leg, z: Leg| -> C64 {
        let mut s = ZERO;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    s -= k[x as usize][a] * k[y as usize][b] * k[z as usize][c] * gamma[a][b][c];
                }
            }
        }
        s
    };
    let mut s = SpinCoefficientSet::zero();
    for z in Leg::ALL {
        let f = s.family_mut(z);
        f[0] = contract(Leg::L, Leg::MBar, z);
        f[1] = -contract(Leg::N, Leg::M, z);
        f[2] = 0.5 * (contract(Leg::L, Leg::N, z) + contract(Leg::M, Leg::MBar, z));
    }
    s
}

pub fn np_letters(s: &SpinCoefficientSet) -> NpLetters {
    NpLetters {
        kappa: s.l[0].conj(),
        pi: s.l[1].conj(),
        epsilon: s.l[2].conj(),
        tau: s.n[0].conj(),
        nu: s.n[1].conj(),
        gamma: s.n[2].conj(),
        rho: s.m[0].conj(),
        lambda: s.m[1].conj(),
        alpha: s.m[2].conj(),
        sigma: s.m_bar[0].conj(),
        mu: s.m_bar[1].conj(),
        beta: s.m_bar[2].conj(),
    }
}

impl NpLetters {
    pub const NAMES: [&'static str; 12] = [
        "kappa", "pi", "epsilon", "rho", "lambda", "alpha", "sigma", "mu", "beta", "tau", "nu",
        "gamma",
    ];

    pub fn to_array(&self) -> [C64; 12] {
        [
            self.kappa,
            self.pi,
            self.epsilon,
            self.rho,
            self.lambda,
            self.alpha,
            self.sigma,
            self.mu,
            self.beta,
            self.tau,
            self.nu,
            self.gamma,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use crate::geometry::{builtin, frame_at};
    use crate::np::null_frame;
    use crate::ricci::ricci_at;

    #[test]
    fn letters_are_conjugates() {
        let mut s = SpinCoefficientSet::zero();
        s.l[0] = c(2.0, 3.0);
        s.m[0] = c(1.0, 0.0);
        let n = np_letters(&s);
        assert_eq!(n.kappa, c(2.0, -3.0));
        assert_eq!(n.rho, c(1.0, 0.0));
        assert!(np_letters(&SpinCoefficientSet::zero())
            .to_array()
            .iter()
            .all(|z| *z == ZERO));
    }

    #[test]
    fn two_routes_agree() {
        for name in ["schwarzschild_diagonal", "minkowski_spherical_diagonal"] {
            let f = builtin::geometry(name).unwrap();
            let fj = frame_at(&f, &[0.1, 3.0, 0.9, 0.4]).unwrap();
            let a = spin_coefficients(&null_frame(&fj));
            let b = spin_coefficients_from_gamma(&ricci_at(&fj).gamma);
            assert!(a.max_abs_diff(&b) < 1e-14, "{name}");
            assert!(a.max_abs() > 0.1);
        }
    }

    #[test]
    fn flat_frames_vanish() {
        let f = builtin::geometry("minkowski_cartesian").unwrap();
        let s = spin_coefficients(&null_frame(&frame_at(&f, &[0.0, 1.0, 2.0, 3.0]).unwrap()));
        assert_eq!(s.max_abs(), 0.0);
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let s = spin_coefficients(&null_frame(&frame_at(&f, &[0.0, 1.3, 0.7, 2.0]).unwrap()));
        assert!(s.max_abs() < 1e-14);
    }
}
