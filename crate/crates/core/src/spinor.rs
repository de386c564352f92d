//! Rank-4 spinor objects built from the rotation coefficients.
//!
//! Axis order of a [`Spinor4`] is `[i][j][k][l]`: the first pair is the
//! matrix slot carrying `sigmabar^a sigma^b`, the second pair carries
//! `sigma^c`. So `gamma[i][j][k][l] = sum gamma_abc (sigmabar^a sigma^b)_ij sigma^c_kl`.

use crate::algebra::{
    pauli_eps, sigma, sigma_bar, sigma_bar_down, sigma_down, zero_tensor3, Mat2, Tensor3, C64, ZERO,
};
use crate::np::{Leg, NullFrameJet, SpinCoefficientSet};
use serde::Serialize;
use std::f64::consts::SQRT_2;

pub type Spinor4 = [[[[C64; 2]; 2]; 2]; 2];

/// Reconstruction weight in the double-trace formula.
pub const RECONSTRUCTION_WEIGHT: f64 = 1.0 / 16.0;

/// `Gamma` slot value divided by the matching spin coefficient.
pub const GAMMA_COMPONENT_SCALE: f64 = 4.0 * SQRT_2;

pub fn zero_spinor4() -> Spinor4 {
    [[[[ZERO; 2]; 2]; 2]; 2]
}

/// `gamma` and its partner `gammabar` (sigma and sigmabar swapped).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaSpinor {
    pub g4: Spinor4,
    pub conj: Spinor4,
}

/// `Gamma = (eps x I x I x I) gamma`, symmetric in its first pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaSymmetric {
    pub gamma: Spinor4,
}

fn outer_add(out: &mut Spinor4, w: C64, first: &Mat2, second: &Mat2) {
    for i in 0..2 {
        for j in 0..2 {
            let f = first[(i, j)] * w;
            if f == ZERO {
                continue;
            }
            for k in 0..2 {
                for l in 0..2 {
                    out[i][j][k][l] += f * second[(k, l)];
                }
            }
        }
    }
}

/// Forward map from a rotation-coefficient tensor.
pub fn gamma_spinor_from_ricci(gamma: &Tensor3) -> GammaSpinor {
    let mut g4 = zero_spinor4();
    let mut conj = zero_spinor4();
    for a in 0..4 {
        for b in 0..4 {
            let sbs = sigma_bar(a) * sigma(b);
            let ssb = sigma(a) * sigma_bar(b);
            for c in 0..4 {
                let w = C64::new(gamma[a][b][c], 0.0);
                if w == ZERO {
                    continue;
                }
                outer_add(&mut g4, w, &sbs, &sigma(c));
                outer_add(&mut conj, w, &ssb, &sigma_bar(c));
            }
        }
    }
    GammaSpinor { g4, conj }
}

/// `sigma^alpha = sqrt2 [[l, m], [mbar, n]]` and `sigmabar^alpha = sqrt2 [[n, -m], [-mbar, l]]`
/// with the given per-leg data.
fn leg_matrix<T: Fn(Leg) -> C64>(bar: bool, v: T) -> Mat2 {
    let s = C64::new(SQRT_2, 0.0);
    if bar {
        Mat2::new(v(Leg::N), -v(Leg::M), -v(Leg::MBar), v(Leg::L)) * s
    } else {
        Mat2::new(v(Leg::L), v(Leg::M), v(Leg::MBar), v(Leg::N)) * s
    }
}

/// `gamma = -sigmabar_{alpha;beta} sigma^alpha (x) sigma^beta` and the
/// partner `-sigma_{alpha;beta} sigmabar^alpha (x) sigmabar^beta`.
pub fn gamma_spinor(nf: &NullFrameJet) -> GammaSpinor {
    let mut g4 = zero_spinor4();
    let mut conj = zero_spinor4();
    let up = |bar: bool, al: usize| leg_matrix(bar, |leg| nf.up[leg as usize][al]);
    let cov = |bar: bool, al: usize, be: usize| leg_matrix(bar, |leg| nf.cov_down[leg as usize][al][be]);
    for al in 0..4 {
        let s_al = up(false, al);
        let sb_al = up(true, al);
        for be in 0..4 {
            let first = cov(true, al, be) * s_al;
            let first_bar = cov(false, al, be) * sb_al;
            outer_add(&mut g4, C64::new(-1.0, 0.0), &first, &up(false, be));
            outer_add(&mut conj, C64::new(-1.0, 0.0), &first_bar, &up(true, be));
        }
    }
    GammaSpinor { g4, conj }
}

/// Double-trace reconstruction, complex before taking the real part.
pub fn reconstruct_ricci_complex(g: &GammaSpinor) -> [[[C64; 4]; 4]; 4] {
    let mut out = [[[ZERO; 4]; 4]; 4];
    for k in 0..4 {
        for l in 0..4 {
            let a = sigma_bar_down(l) * sigma_down(k);
            let ab = sigma_down(l) * sigma_bar_down(k);
            // Tr(A X) for each (p, q) slot of the second pair.
            let mut first = [[ZERO; 2]; 2];
            let mut first_bar = [[ZERO; 2]; 2];
            for p in 0..2 {
                for q in 0..2 {
                    for i in 0..2 {
                        for m in 0..2 {
                            first[p][q] += a[(i, m)] * g.g4[m][i][p][q];
                            first_bar[p][q] += ab[(i, m)] * g.conj[m][i][p][q];
                        }
                    }
                }
            }
            for n in 0..4 {
                let sbn = sigma_bar_down(n);
                let sn = sigma_down(n);
                let mut s = ZERO;
                for p in 0..2 {
                    for q in 0..2 {
                        s += first[p][q] * sbn[(q, p)] + first_bar[p][q] * sn[(q, p)];
                    }
                }
                out[k][l][n] = s * RECONSTRUCTION_WEIGHT;
            }
        }
    }
    out
}

/// Rotation coefficients rebuilt from the spinor pair.
pub fn reconstruct_ricci(g: &GammaSpinor) -> Tensor3 {
    let c = reconstruct_ricci_complex(g);
    let mut t = zero_tensor3();
    for k in 0..4 {
        for l in 0..4 {
            for n in 0..4 {
                t[k][l][n] = c[k][l][n].re;
            }
        }
    }
    t
}

/// Largest imaginary part left over in the reconstruction.
pub fn reconstruction_imaginary_residual(g: &GammaSpinor) -> f64 {
    reconstruct_ricci_complex(g)
        .iter()
        .flatten()
        .flatten()
        .fold(0.0_f64, |m, z| m.max(z.im.abs()))
}

pub fn apply_first(m: &Mat2, s: &Spinor4) -> Spinor4 {
    let mut out = zero_spinor4();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[i][j][k][l] = m[(i, 0)] * s[0][j][k][l] + m[(i, 1)] * s[1][j][k][l];
                }
            }
        }
    }
    out
}

pub fn gamma_symmetric(g: &GammaSpinor) -> GammaSymmetric {
    GammaSymmetric {
        gamma: apply_first(&pauli_eps(), &g.g4),
    }
}

/// `(I x eps x eps x eps) gammabar`.
pub fn gamma_bar_symmetric(g: &GammaSpinor) -> Spinor4 {
    let e = pauli_eps();
    let mut out = zero_spinor4();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut s = ZERO;
                    for jj in 0..2 {
                        for kk in 0..2 {
                            for ll in 0..2 {
                                s += e[(j, jj)] * e[(k, kk)] * e[(l, ll)] * g.conj[i][jj][kk][ll];
                            }
                        }
                    }
                    out[i][j][k][l] = s;
                }
            }
        }
    }
    out
}

pub fn max_abs_diff4(a: &Spinor4, b: &Spinor4) -> f64 {
    let mut m = 0.0_f64;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m = m.max((a[i][j][k][l] - b[i][j][k][l]).norm());
                }
            }
        }
    }
    m
}

pub fn conj4(a: &Spinor4) -> Spinor4 {
    a.map(|x| x.map(|y| y.map(|z| z.map(|w| w.conj()))))
}

/// First-pair slot for spin-coefficient index 1, 2, 3.
const INDEX_SLOTS: [(usize, usize); 3] = [(0, 0), (1, 1), (0, 1)];

/// Second-pair slot for each family.
fn family_slot(z: Leg) -> (usize, usize) {
    match z {
        Leg::L => (0, 0),
        Leg::M => (0, 1),
        Leg::MBar => (1, 0),
        Leg::N => (1, 1),
    }
}

impl GammaSymmetric {
    pub fn zero() -> Self {
        GammaSymmetric {
            gamma: zero_spinor4(),
        }
    }

    /// `|Gamma_ijkl - Gamma_jikl|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut m = 0.0_f64;
        for k in 0..2 {
            for l in 0..2 {
                m = m.max((self.gamma[0][1][k][l] - self.gamma[1][0][k][l]).norm());
            }
        }
        m
    }

    /// The twelve independent slot values divided by [`GAMMA_COMPONENT_SCALE`].
    pub fn spin_coefficients(&self) -> SpinCoefficientSet {
        let mut s = SpinCoefficientSet::zero();
        for z in Leg::ALL {
            let (k, l) = family_slot(z);
            let f = s.family_mut(z);
            for (idx, (i, j)) in INDEX_SLOTS.iter().enumerate() {
                f[idx] = self.gamma[*i][*j][k][l] / GAMMA_COMPONENT_SCALE;
            }
        }
        s
    }

    /// Inverse of [`Self::spin_coefficients`].
    pub fn from_spin_coefficients(s: &SpinCoefficientSet) -> Self {
        let mut g = zero_spinor4();
        for z in Leg::ALL {
            let (k, l) = family_slot(z);
            let f = s.family(z);
            for (idx, (i, j)) in INDEX_SLOTS.iter().enumerate() {
                g[*i][*j][k][l] = f[idx] * GAMMA_COMPONENT_SCALE;
                g[*j][*i][k][l] = f[idx] * GAMMA_COMPONENT_SCALE;
            }
        }
        GammaSymmetric { gamma: g }
    }

    pub fn max_abs_diff(&self, o: &GammaSymmetric) -> f64 {
        max_abs_diff4(&self.gamma, &o.gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::max_abs_diff_tensor3;
    use crate::geometry::{builtin, frame_at};
    use crate::np::{null_frame, spin_coefficients};
    use crate::ricci::ricci_at;

    fn setup(name: &str) -> (Tensor3, NullFrameJet) {
        let f = builtin::geometry(name).unwrap();
        let fj = frame_at(&f, &[0.2, 3.0, 1.1, 0.4]).unwrap();
        (ricci_at(&fj).gamma, null_frame(&fj))
    }

    #[test]
    fn covariant_and_tensor_forms_agree() {
        for name in ["schwarzschild_diagonal", "cartesian_in_spherical", "minkowski_spherical_diagonal"] {
            let (gam, nf) = setup(name);
            let a = gamma_spinor(&nf);
            let b = gamma_spinor_from_ricci(&gam);
            assert!(max_abs_diff4(&a.g4, &b.g4) < 1e-14, "{name}");
            assert!(max_abs_diff4(&a.conj, &b.conj) < 1e-14, "{name}");
        }
    }

    #[test]
    fn round_trip() {
        let (gam, nf) = setup("schwarzschild_diagonal");
        let g = gamma_spinor(&nf);
        assert!(max_abs_diff_tensor3(&reconstruct_ricci(&g), &gam) < 1e-14);
        assert!(reconstruction_imaginary_residual(&g) < 1e-14);
    }

    #[test]
    fn symmetric_object_and_slot_map() {
        let (_, nf) = setup("schwarzschild_diagonal");
        let g = gamma_spinor(&nf);
        let big = gamma_symmetric(&g);
        assert!(big.antisymmetry_residual() < 1e-14);
        let s = spin_coefficients(&nf);
        assert!(big.spin_coefficients().max_abs_diff(&s) < 1e-14);
        assert!(GammaSymmetric::from_spin_coefficients(&s).max_abs_diff(&big) < 1e-14);
    }

    #[test]
    fn conjugation_relations() {
        let (_, nf) = setup("schwarzschild_diagonal");
        let g = gamma_spinor(&nf);
        let big = gamma_symmetric(&g);
        assert!(max_abs_diff4(&g.conj, &conj4(&g.g4)) > 0.1);
        let minus: Spinor4 = conj4(&big.gamma).map(|x| x.map(|y| y.map(|z| z.map(|w| -w))));
        assert!(max_abs_diff4(&gamma_bar_symmetric(&g), &minus) < 1e-14);
    }
}
