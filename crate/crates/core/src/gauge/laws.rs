use super::lorentz::LorentzMatrixJet;
use super::spinor_field::SpinorJet;
use crate::algebra::{levi_civita_last_down, pauli_eps, Mat2, Vec4, C64, ETA_DIAG, ZERO};
use crate::geometry::FrameJet;
use crate::np::{Leg, NullFrameJet, SpinCoefficientSet, SPINOR_NORMALIZATION};
use crate::spinor::{zero_spinor4, GammaSymmetric, Spinor4};
use serde::Serialize;

/// `B'_a = L_a^b B_b + 1/2 (d_beta L_a^b) e_(b)^beta`.
pub fn transform_b(b: &Vec4, l: &LorentzMatrixJet, frame: &FrameJet) -> Vec4 {
    let mut out = [0.0; 4];
    for (a, o) in out.iter_mut().enumerate() {
        let mut s = 0.0;
        for k in 0..4 {
            s += l.value[a][k] * b[k];
            for be in 0..4 {
                s += 0.5 * l.partials[be][a][k] * frame.e_up[k][be];
            }
        }
        *o = s;
    }
    out
}

/// `C'_d = det L L_d^m C_m + 1/4 eps^{abc}_d L_{al} (d_mu L_b^l) L_c^n e_(n)^mu`.
pub fn transform_c(c: &Vec4, l: &LorentzMatrixJet, frame: &FrameJet) -> Vec4 {
    let det = l.det();
    // dl[b][l][c] = (d_mu L_b^l) L_c^n e_(n)^mu
    let mut dl = [[[0.0; 4]; 4]; 4];
    for (b, row) in dl.iter_mut().enumerate() {
        for (lo, col) in row.iter_mut().enumerate() {
            for (cc, v) in col.iter_mut().enumerate() {
                let mut s = 0.0;
                for n in 0..4 {
                    for mu in 0..4 {
                        s += l.partials[mu][b][lo] * l.value[cc][n] * frame.e_up[n][mu];
                    }
                }
                *v = s;
            }
        }
    }
    let mut out = [0.0; 4];
    for (d, o) in out.iter_mut().enumerate() {
        let mut s: f64 = (0..4).map(|m| det * l.value[d][m] * c[m]).sum();
        for a in 0..4 {
            for b in 0..4 {
                for cc in 0..4 {
                    let e = levi_civita_last_down(a, b, cc, d);
                    if e == 0.0 {
                        continue;
                    }
                    let t: f64 = (0..4).map(|lo| l.value[a][lo] * ETA_DIAG[lo] * dl[b][lo][cc]).sum();
                    s += 0.25 * e * t;
                }
            }
        }
        *o = s;
    }
    out
}

/// The twelve kernels `F_i, G_i, H_i, Delta_i` in spinor normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaugeKernels {
    pub f: [C64; 3],
    pub g: [C64; 3],
    pub h: [C64; 3],
    pub delta: [C64; 3],
}

fn sym(x: &[C64; 3]) -> Mat2 {
    Mat2::new(x[0], x[2], x[2], x[1])
}

fn unsym(m: &Mat2) -> [C64; 3] {
    [m[(0, 0)], m[(1, 1)], m[(0, 1)]]
}

/// `-eps d_mu B B^-1` for each coordinate direction.
fn inhomogeneous(jet: &SpinorJet) -> [Mat2; 4] {
    let inv = jet.inverse();
    let eps = pauli_eps();
    jet.partials.map(|d| -(eps * d * inv))
}

fn contract_leg(v: &[C64; 4], m: &[Mat2; 4]) -> Mat2 {
    (0..4).fold(Mat2::ZERO, |acc, mu| acc + m[mu] * v[mu])
}

/// Kernels for spin coefficients `s` (canonical normalization) under the
/// gauge `jet`, with the null frame `nf` before the change. E.g.
/// `F_1 = b^2 L_1 + d^2 L_2 - 2bd L_3 - 2 l^mu (b d_mu d - d d_mu b)`,
/// where `l^mu` is taken as a `sigma^alpha` entry.
pub fn gauge_kernels(s: &SpinCoefficientSet, nf: &NullFrameJet, jet: &SpinorJet) -> GaugeKernels {
    let inv = jet.inverse();
    let inv_t = inv.transpose();
    let inh = inhomogeneous(jet);
    let legs = nf.sigma_entries();
    let kernel = |z: Leg| -> [C64; 3] {
        let p = sym(s.family(z)) * C64::from(SPINOR_NORMALIZATION);
        let k = inv_t * p * inv + contract_leg(&legs[z as usize], &inh) * C64::from(-2.0);
        unsym(&k)
    };
    GaugeKernels {
        f: kernel(Leg::L),
        g: kernel(Leg::N),
        h: kernel(Leg::M),
        delta: kernel(Leg::MBar),
    }
}

/// Primed spin coefficients from the kernels, returned in canonical
/// normalization.
pub fn transform_spin_coefficients(
    s: &SpinCoefficientSet,
    nf: &NullFrameJet,
    jet: &SpinorJet,
) -> SpinCoefficientSet {
    let k = gauge_kernels(s, nf, jet);
    let (a, b, c, d) = (jet.a(), jet.b(), jet.c(), jet.d());
    let (ac, bc, cc, dc) = (a.conj(), b.conj(), c.conj(), d.conj());
    let mut out = SpinCoefficientSet::zero();
    let w = 1.0 / SPINOR_NORMALIZATION;
    for i in 0..3 {
        let (f, g, h, x) = (k.f[i], k.g[i], k.h[i], k.delta[i]);
        out.l[i] = (b * bc * f + d * dc * g - d * bc * h - dc * b * x) * w;
        out.m[i] = (-c * bc * f - a * dc * g + a * bc * h + c * dc * x) * w;
        out.m_bar[i] = (-cc * b * f - ac * d * g + d * cc * h + ac * b * x) * w;
        out.n[i] = (c * cc * f + a * ac * g - a * cc * h - ac * c * x) * w;
    }
    out
}

/// `Gamma' = ((B^-1)^T x B^-1 x (B^dagger)^-1 x B^-1) Gamma
///  - 4 sum_beta (eps d_beta B B^-1) x sigma'^beta`, with
/// `sigma'^beta = (B^dagger)^-1 sigma^beta B^-1`.
pub fn transform_gamma_symmetric(g: &GammaSymmetric, nf: &NullFrameJet, jet: &SpinorJet) -> GammaSymmetric {
    let inv = jet.inverse();
    let inv_t = inv.transpose();
    let inv_dag = inv.dagger();
    let mut out = zero_spinor4();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut s = ZERO;
                    for i2 in 0..2 {
                        for j2 in 0..2 {
                            let w1 = inv_t[(i, i2)] * inv[(j2, j)];
                            if w1 == ZERO {
                                continue;
                            }
                            for k2 in 0..2 {
                                for l2 in 0..2 {
                                    s += w1 * inv_dag[(k, k2)] * inv[(l2, l)] * g.gamma[i2][j2][k2][l2];
                                }
                            }
                        }
                    }
                    out[i][j][k][l] = s;
                }
            }
        }
    }
    let inh = inhomogeneous(jet);
    let e = nf.sigma_entries();
    for be in 0..4 {
        let sig = Mat2::new(
            e[Leg::L as usize][be],
            e[Leg::M as usize][be],
            e[Leg::MBar as usize][be],
            e[Leg::N as usize][be],
        );
        let sig_p = inv_dag * sig * inv;
        add_outer(&mut out, &inh[be], &sig_p, C64::from(4.0));
    }
    GammaSymmetric { gamma: out }
}

fn add_outer(out: &mut Spinor4, first: &Mat2, second: &Mat2, w: C64) {
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[i][j][k][l] += w * first[(i, j)] * second[(k, l)];
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{ConstantLorentz, LorentzSource, SpinorGaugeField};
    use super::*;
    use crate::algebra::{c, max_abs_diff4, Mat4};
    use crate::geometry::{builtin, frame_at, DiffMode, TetradField};
    use crate::np::{null_frame, spin_coefficients};
    use crate::ricci::ricci_at;
    use crate::spinor::{gamma_spinor, gamma_symmetric};
    use std::f64::consts::PI;
    use std::sync::Arc;

    fn random_gauge(chart: &crate::geometry::Chart) -> SpinorGaugeField {
        // a = E + pq/E, c = p/E, d = q/E, b = 1/E
        let e = "exp(0.3*sin(x1) + i*0.2*x2 - 0.1*x3)";
        let p = "(0.4 - 0.3*i)*sin(x1 + 0.5*x2)";
        let q = "(0.2 + 0.5*i)*cos(x3 - x0)";
        SpinorGaugeField::from_strings(
            &format!("{e} + ({p})*({q})/({e})"),
            &format!("1/({e})"),
            &format!("({p})/({e})"),
            &format!("({q})/({e})"),
            chart,
            Default::default(),
        )
        .unwrap()
    }

    struct Both {
        before: FrameJet,
        after: FrameJet,
        jet: SpinorJet,
    }

    fn setup(field: &TetradField, g: SpinorGaugeField, p: &[f64; 4]) -> Both {
        let jet = g.spinor_jet(p, DiffMode::Dual).unwrap();
        let gauged = field.gauged(Arc::new(g));
        Both {
            before: frame_at(field, p).unwrap(),
            after: frame_at(&gauged, p).unwrap(),
            jet,
        }
    }

    #[test]
    fn commuting_square_random_gauge() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let g = random_gauge(&f.chart);
        for p in [[0.2, 1.3, 0.9, 0.3], [0.0, 2.5, 2.1, -1.0]] {
            let s = setup(&f, g.clone(), &p);
            let r0 = ricci_at(&s.before);
            let r1 = ricci_at(&s.after);
            let l = s.jet.lorentz();
            assert!(max_abs_diff4(&transform_b(&r0.b_dirac, &l, &s.before), &r1.b_dirac) < 1e-9);
            assert!(max_abs_diff4(&transform_c(&r0.c, &l, &s.before), &r1.c) < 1e-9);
            let nf0 = null_frame(&s.before);
            let nf1 = null_frame(&s.after);
            let s0 = spin_coefficients(&nf0);
            let s1 = spin_coefficients(&nf1);
            assert!(transform_spin_coefficients(&s0, &nf0, &s.jet).max_abs_diff(&s1) < 1e-9);
            let g0 = gamma_symmetric(&gamma_spinor(&nf0));
            let g1 = gamma_symmetric(&gamma_spinor(&nf1));
            assert!(transform_gamma_symmetric(&g0, &nf0, &s.jet).max_abs_diff(&g1) < 1e-9);
        }
    }

    #[test]
    fn spherical_gauge_kernels() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let p = [0.0, 1.0, PI / 2.0, 0.0];
        let s = setup(&f, SpinorGaugeField::spherical(), &p);
        let nf = null_frame(&s.before);
        let k = gauge_kernels(&spin_coefficients(&nf), &nf, &s.jet);
        assert!((k.f[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((k.h[0] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn identity_gauge_zero_kernels() {
        let f = builtin::geometry("minkowski_cartesian").unwrap();
        let s = setup(&f, SpinorGaugeField::identity(), &[0.0, 1.0, 2.0, 3.0]);
        let nf = null_frame(&s.before);
        let k = gauge_kernels(&spin_coefficients(&nf), &nf, &s.jet);
        let m = [k.f, k.g, k.h, k.delta].iter().flatten().fold(0.0_f64, |m, z| m.max(z.norm()));
        assert_eq!(m, 0.0);
    }

    #[test]
    fn spherical_coefficients() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let (r, th) = (2.0, PI / 3.0);
        let s = setup(&f, SpinorGaugeField::spherical(), &[0.0, r, th, 0.4]);
        let nf = null_frame(&s.before);
        let out = transform_spin_coefficients(&spin_coefficients(&nf), &nf, &s.jet)
            .scale(C64::from(SPINOR_NORMALIZATION));
        let cot = th.cos() / th.sin();
        assert!((out.m[0] - c(2.0 / r, 0.0)).norm() < 1e-12);
        assert!((out.m_bar[1] - c(2.0 / r, 0.0)).norm() < 1e-12);
        assert!((out.m[2] - c(cot / r, 0.0)).norm() < 1e-12);
        assert!((out.m_bar[2] - c(-cot / r, 0.0)).norm() < 1e-12);
        for z in [out.l, out.n].iter().flatten().chain([out.m[1], out.m_bar[0]].iter()) {
            assert!(z.norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_slots_track_coefficients() {
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        let g = random_gauge(&f.chart);
        let s = setup(&f, g, &[0.3, 4.0, 1.1, 0.7]);
        let nf = null_frame(&s.before);
        let s0 = spin_coefficients(&nf);
        let g0 = gamma_symmetric(&gamma_spinor(&nf));
        let via_gamma = transform_gamma_symmetric(&g0, &nf, &s.jet).spin_coefficients();
        let via_law = transform_spin_coefficients(&s0, &nf, &s.jet);
        assert!(via_gamma.max_abs_diff(&via_law) < 1e-12);
    }

    #[test]
    fn improper_constant_flips_c() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let mut m: Mat4 = [[0.0; 4]; 4];
        for (a, row) in m.iter_mut().enumerate() {
            row[a] = if a == 2 { -1.0 } else { 1.0 };
        }
        let l = ConstantLorentz(m);
        let p = [0.0, 1.5, 0.8, 0.2];
        let jet = l.lorentz_jet(&p, DiffMode::Dual).unwrap();
        assert_eq!(jet.det_sign, -1.0);
        let before = frame_at(&f, &p).unwrap();
        let after = frame_at(&f.gauged(Arc::new(l)), &p).unwrap();
        // a synthetic C probes the homogeneous term alone
        let cin = [0.3, -0.2, 0.5, 0.7];
        let cout = transform_c(&cin, &jet, &before);
        for d in 0..4 {
            let plain: f64 = (0..4).map(|k| m[d][k] * cin[k]).sum();
            assert!((cout[d] + plain).abs() < 1e-15);
        }
        let r1 = ricci_at(&after);
        assert!(max_abs_diff4(&transform_c(&ricci_at(&before).c, &jet, &before), &r1.c) < 1e-12);
    }
}
