//! Ricci rotation coefficients, the B and C vectors, and the irreducible
//! decomposition `gamma = C_part + B_part + E_part`.
//!
//! Conventions: `gamma_abc = -e_(a)beta;alpha e_(b)^beta e_(c)^alpha`
//! (antisymmetric in `ab`), `C_k = 1/4 eps^{abc}_k gamma_abc`,
//! `B_dirac_k = 1/2 e_(k)^alpha_;alpha` and `B_trace_b = gamma_kb^k`.
//! The two B normalizations differ by the constant [`B_TRACE_PER_DIRAC`].

use crate::algebra::{
    levi_civita_down, levi_civita_last_down, max_abs_tensor3, zero_tensor3, Tensor3, Vec4,
    ETA_DIAG,
};
use crate::geometry::FrameJet;
use serde::Serialize;
use std::collections::BTreeMap;

/// `B_trace = B_TRACE_PER_DIRAC * B_dirac` at every point of every frame.
pub const B_TRACE_PER_DIRAC: f64 = 2.0;

/// Weight of the trace part in the decomposition.
pub const TRACE_WEIGHT: f64 = 1.0 / 3.0;

#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub c_part: Tensor3,
    pub b_part: Tensor3,
    pub e_part: Tensor3,
}

#[derive(Debug, Clone, Serialize)]
pub struct RicciAtPoint {
    pub gamma: Tensor3,
    pub lam: Tensor3,
    pub b_dirac: Vec4,
    pub b_trace: Vec4,
    pub c: Vec4,
    pub decomposition: Decomposition,
}

/// Rotation coefficients and everything derived from them.
pub fn ricci_at(frame: &FrameJet) -> RicciAtPoint {
    let mut gamma = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let mut s = 0.0;
                for be in 0..4 {
                    for al in 0..4 {
                        s += frame.cov_deriv_down[a][be][al] * frame.e_up[b][be] * frame.e_up[c][al];
                    }
                }
                gamma[a][b][c] = -s;
            }
        }
    }
    let mut b_dirac = [0.0; 4];
    for (k, bk) in b_dirac.iter_mut().enumerate() {
        let mut s = 0.0;
        for al in 0..4 {
            for be in 0..4 {
                s += frame.g_inv[al][be] * frame.cov_deriv_down[k][be][al];
            }
        }
        *bk = 0.5 * s;
    }
    let lam = lambda_at(frame);
    from_parts(gamma, lam, b_dirac)
}

/// Build from a (possibly synthetic) rotation-coefficient tensor. `lam` is
/// derived from `gamma` and `B_dirac` from `B_trace`.
pub fn from_gamma(gamma: Tensor3) -> RicciAtPoint {
    let lam = lambda_from_gamma(&gamma);
    let bt = b_trace(&gamma);
    from_parts(gamma, lam, bt.map(|x| x / B_TRACE_PER_DIRAC))
}

fn from_parts(gamma: Tensor3, lam: Tensor3, b_dirac: Vec4) -> RicciAtPoint {
    let b_trace = b_trace(&gamma);
    let c = c_from_gamma(&gamma);
    let decomposition = decompose(&gamma, &b_trace);
    RicciAtPoint {
        gamma,
        lam,
        b_dirac,
        b_trace,
        c,
        decomposition,
    }
}

/// `lambda_abc = (d_beta e_(a)alpha - d_alpha e_(a)beta) e_(c)^alpha e_(b)^beta`.
pub fn lambda_at(frame: &FrameJet) -> Tensor3 {
    let d = &frame.e_down_partials;
    let mut lam = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let mut s = 0.0;
                for al in 0..4 {
                    for be in 0..4 {
                        s += (d[be][a][al] - d[al][a][be]) * frame.e_up[c][al] * frame.e_up[b][be];
                    }
                }
                lam[a][b][c] = s;
            }
        }
    }
    lam
}

pub fn lambda_from_gamma(gamma: &Tensor3) -> Tensor3 {
    let mut lam = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                lam[a][b][c] = gamma[a][b][c] - gamma[a][c][b];
            }
        }
    }
    lam
}

/// `gamma_abc = 1/2 (lambda_abc + lambda_bca - lambda_cab)`.
pub fn gamma_from_lambda(lam: &Tensor3) -> Tensor3 {
    let mut g = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                g[a][b][c] = 0.5 * (lam[a][b][c] + lam[b][c][a] - lam[c][a][b]);
            }
        }
    }
    g
}

pub fn c_from_gamma(gamma: &Tensor3) -> Vec4 {
    eps_contract(gamma).map(|x| 0.25 * x)
}

/// `C_k = 1/8 eps^{abc}_k lambda_abc`.
pub fn c_from_lambda(lam: &Tensor3) -> Vec4 {
    eps_contract(lam).map(|x| 0.125 * x)
}

/// `eps^{abc}_m t_abc`.
pub fn eps_contract(t: &Tensor3) -> Vec4 {
    let mut out = [0.0; 4];
    for (m, o) in out.iter_mut().enumerate() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    *o += levi_civita_last_down(a, b, c, m) * t[a][b][c];
                }
            }
        }
    }
    out
}

/// Trace over first and last index: `t_kb^k`.
pub fn trace13(t: &Tensor3) -> Vec4 {
    let mut out = [0.0; 4];
    for (b, o) in out.iter_mut().enumerate() {
        for k in 0..4 {
            *o += ETA_DIAG[k] * t[k][b][k];
        }
    }
    out
}

pub fn b_trace(gamma: &Tensor3) -> Vec4 {
    trace13(gamma)
}

/// Split `gamma` into totally antisymmetric, trace and trace-free parts.
pub fn decompose(gamma: &Tensor3, b_trace: &Vec4) -> Decomposition {
    let mut c_part = zero_tensor3();
    let mut b_part = zero_tensor3();
    let mut e_part = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                c_part[a][b][c] = (gamma[a][b][c] + gamma[b][c][a] + gamma[c][a][b]) / 3.0;
                let eta_ac = if a == c { ETA_DIAG[a] } else { 0.0 };
                let eta_bc = if b == c { ETA_DIAG[b] } else { 0.0 };
                b_part[a][b][c] = TRACE_WEIGHT * (eta_ac * b_trace[b] - eta_bc * b_trace[a]);
                e_part[a][b][c] = gamma[a][b][c] - c_part[a][b][c] - b_part[a][b][c];
            }
        }
    }
    Decomposition {
        c_part,
        b_part,
        e_part,
    }
}

/// `-2/3 eps_abc^n C_n`, the dual form of the totally antisymmetric part.
pub fn c_part_from_vector(c: &Vec4) -> Tensor3 {
    let mut t = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for cc in 0..4 {
                let mut s = 0.0;
                for n in 0..4 {
                    s += levi_civita_down(a, b, cc, n) * ETA_DIAG[n] * c[n];
                }
                t[a][b][cc] = -2.0 / 3.0 * s;
            }
        }
    }
    t
}

fn vmax(v: &Vec4) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

fn vdiff(a: &Vec4, b: &Vec4) -> f64 {
    (0..4).fold(0.0_f64, |m, i| m.max((a[i] - b[i]).abs()))
}

fn tdiff(a: &Tensor3, b: &Tensor3) -> f64 {
    crate::algebra::max_abs_diff_tensor3(a, b)
}

/// Named residuals of the decomposition identities; all vanish in exact
/// arithmetic.
pub fn decomposition_residuals(r: &RicciAtPoint) -> BTreeMap<&'static str, f64> {
    let d = &r.decomposition;
    let mut delta = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                delta[a][b][c] = r.gamma[a][b][c] - d.c_part[a][b][c];
            }
        }
    }
    let mut sum = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                sum[a][b][c] = d.c_part[a][b][c] + d.b_part[a][b][c] + d.e_part[a][b][c];
            }
        }
    }
    let mut closed = zero_tensor3();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                closed[a][b][c] = (r.gamma[a][b][c] + r.gamma[b][c][a] + r.gamma[c][a][b]) / 3.0;
            }
        }
    }
    let four_c = r.c.map(|x| 4.0 * x);
    let mut m = BTreeMap::new();
    m.insert("delta_dual", vmax(&eps_contract(&delta)));
    m.insert("c_part_dual", vdiff(&eps_contract(&d.c_part), &four_c));
    m.insert("b_part_trace", vdiff(&trace13(&d.b_part), &r.b_trace));
    m.insert("e_part_trace", vmax(&trace13(&d.e_part)));
    m.insert("e_part_dual", vmax(&eps_contract(&d.e_part)));
    m.insert("reconstruction", tdiff(&sum, &r.gamma));
    m.insert("c_part_closed_form", tdiff(&closed, &d.c_part));
    m.insert("c_part_vector_form", tdiff(&c_part_from_vector(&r.c), &d.c_part));
    m.insert("c_part_contractions", c_part_contractions(&d.c_part));
    m
}

/// Largest single contraction of a rank-3 tensor over any index pair.
pub fn c_part_contractions(t: &Tensor3) -> f64 {
    let mut m = 0.0_f64;
    for free in 0..4 {
        let mut s12 = 0.0;
        let mut s13 = 0.0;
        let mut s23 = 0.0;
        for k in 0..4 {
            s12 += ETA_DIAG[k] * t[k][k][free];
            s13 += ETA_DIAG[k] * t[k][free][k];
            s23 += ETA_DIAG[k] * t[free][k][k];
        }
        m = m.max(s12.abs()).max(s13.abs()).max(s23.abs());
    }
    m
}

impl RicciAtPoint {
    pub fn max_abs(&self) -> f64 {
        max_abs_tensor3(&self.gamma)
            .max(max_abs_tensor3(&self.lam))
            .max(vmax(&self.b_dirac))
            .max(vmax(&self.c))
    }

    /// `|gamma_abc + gamma_bac|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut m = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    m = m.max((self.gamma[a][b][c] + self.gamma[b][a][c]).abs());
                }
            }
        }
        m
    }

    /// `|gamma - 1/2 (lambda_abc + lambda_bca - lambda_cab)|` with lambda
    /// from ordinary partials.
    pub fn lambda_identity_residual(&self) -> f64 {
        tdiff(&gamma_from_lambda(&self.lam), &self.gamma)
    }

    /// `|C(from lambda) - C(from gamma)|`.
    pub fn c_route_residual(&self) -> f64 {
        vdiff(&c_from_lambda(&self.lam), &self.c)
    }

    /// `|B_trace - kappa_B B_dirac|`.
    pub fn b_normalization_residual(&self) -> f64 {
        vdiff(&self.b_trace, &self.b_dirac.map(|x| B_TRACE_PER_DIRAC * x))
    }

    /// Independent rotation coefficients `gamma_abc`, `a < b`, in the order
    /// used for tabular output.
    pub fn independent_gamma(&self) -> Vec<((usize, usize, usize), f64)> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in (a + 1)..4 {
                for c in 0..4 {
                    out.push(((a, b, c), self.gamma[a][b][c]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{builtin, frame_at, frame_at_with, DiffMode};
    use std::f64::consts::PI;

    /// Rotation coefficients straight from Eq.-free brute force: central
    /// differences of the coframe and finite-difference Christoffels.
    fn fd_gamma(name: &str, p: [f64; 4]) -> Tensor3 {
        let f = builtin::geometry(name).unwrap();
        let fj = frame_at_with(&f, &p, DiffMode::Fd).unwrap();
        ricci_at(&fj).gamma
    }

    #[test]
    fn flat_cartesian_is_zero() {
        let f = builtin::geometry("minkowski_cartesian").unwrap();
        let r = ricci_at(&frame_at(&f, &[1.0, 2.0, 3.0, 4.0]).unwrap());
        assert_eq!(r.max_abs(), 0.0);
        assert!(decomposition_residuals(&r).values().all(|v| *v == 0.0));
    }

    #[test]
    fn spherical_diagonal_values() {
        let f = builtin::geometry("minkowski_spherical_diagonal").unwrap();
        let p = [0.0, 2.0, PI / 2.0, 0.0];
        let r = ricci_at(&frame_at(&f, &p).unwrap());
        assert!((r.gamma[2][1][2].abs() - 0.5).abs() < 1e-14);
        assert!(vmax(&r.c) < 1e-15);
        let oracle = fd_gamma("minkowski_spherical_diagonal", p);
        assert!(tdiff(&oracle, &r.gamma) < 1e-8);
    }

    #[test]
    fn schwarzschild_radial_acceleration() {
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        let r = ricci_at(&frame_at(&f, &[0.0, 10.0, PI / 2.0, 0.0]).unwrap());
        let expect = 1.0 / (100.0 * (0.8f64).sqrt());
        assert!((r.gamma[0][1][0].abs() - expect).abs() < 1e-14);
        assert!((expect - 0.011180).abs() < 1e-6);
    }

    #[test]
    fn identities_on_cartesian_in_spherical() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let r = ricci_at(&frame_at(&f, &[0.0, 1.0, PI / 3.0, 0.0]).unwrap());
        assert!(r.antisymmetry_residual() < 1e-14);
        assert!(r.lambda_identity_residual() < 1e-13);
        assert!(r.c_route_residual() < 1e-13);
        assert!(r.b_normalization_residual() < 1e-13);
    }

    #[test]
    fn b_normalizations_differ_by_two() {
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        let r = ricci_at(&frame_at(&f, &[0.0, 4.0, 1.0, 0.5]).unwrap());
        for k in 0..4 {
            assert!((r.b_trace[k] - 2.0 * r.b_dirac[k]).abs() < 1e-14);
        }
        assert!(r.b_dirac[1].abs() > 0.1);
    }
}
