use super::{DiffMode, TetradField};
use crate::algebra::{condition_number, inverse4, Mat4, Tensor3, Vec4, ETA_DIAG};
use crate::error::{Error, Result};
use crate::tolerance;
use serde::Serialize;

/// Frame, metric and connection data at one point. Index conventions:
///
/// - `e_up[a][alpha] = e_(a)^alpha`, `e_down[a][alpha] = e_(a)alpha`
/// - `e_up_partials[beta][a][alpha] = d_beta e_(a)^alpha`
/// - `g_partials[gamma][alpha][beta] = d_gamma g_alphabeta`
/// - `christoffel[rho][alpha][beta] = Gamma^rho_alphabeta`
/// - `cov_deriv_down[a][beta][alpha] = e_(a)beta;alpha`
#[derive(Debug, Clone, Serialize)]
pub struct FrameJet {
    pub point: Vec4,
    pub e_up: Mat4,
    pub e_up_partials: [Mat4; 4],
    pub e_down: Mat4,
    pub e_down_partials: [Mat4; 4],
    pub g: Mat4,
    pub g_inv: Mat4,
    pub g_partials: [Mat4; 4],
    pub christoffel: Tensor3,
    pub cov_deriv_down: Tensor3,
}

/// Evaluate a tetrad field with exact derivatives.
pub fn frame_at(field: &TetradField, point: &Vec4) -> Result<FrameJet> {
    frame_at_with(field, point, DiffMode::Dual)
}

pub fn frame_at_with(field: &TetradField, point: &Vec4, mode: DiffMode) -> Result<FrameJet> {
    let tj = field.tetrad_jet(point, mode)?;
    FrameJet::from_tetrad(point, &tj.e_up, &tj.partials)
}

impl FrameJet {
    /// Build from frame components and their partials.
    pub fn from_tetrad(point: &Vec4, e_up: &Mat4, partials: &[Mat4; 4]) -> Result<Self> {
        let condition = condition_number(e_up);
        if !(condition <= tolerance::MAX_CONDITION) {
            return Err(Error::SingularTetrad {
                point: *point,
                condition,
            });
        }
        // e_up as a matrix M[a][alpha]; coframe e^(a)_alpha = (M^-1)[alpha][a].
        let minv = inverse4(e_up).expect("condition checked");
        let mut e_down = [[0.0; 4]; 4];
        for a in 0..4 {
            for al in 0..4 {
                e_down[a][al] = ETA_DIAG[a] * minv[al][a];
            }
        }
        let mut e_down_partials = [[[0.0; 4]; 4]; 4];
        for be in 0..4 {
            // d(M^-1) = -M^-1 (dM) M^-1
            let mut dinv = [[0.0; 4]; 4];
            for al in 0..4 {
                for a in 0..4 {
                    let mut s = 0.0;
                    for b in 0..4 {
                        for ga in 0..4 {
                            s -= minv[al][b] * partials[be][b][ga] * minv[ga][a];
                        }
                    }
                    dinv[al][a] = s;
                }
            }
            for a in 0..4 {
                for al in 0..4 {
                    e_down_partials[be][a][al] = ETA_DIAG[a] * dinv[al][a];
                }
            }
        }

        let mut g = [[0.0; 4]; 4];
        let mut g_inv = [[0.0; 4]; 4];
        let mut g_partials = [[[0.0; 4]; 4]; 4];
        for al in 0..4 {
            for be in 0..4 {
                for a in 0..4 {
                    let s = ETA_DIAG[a];
                    g[al][be] += s * e_down[a][al] * e_down[a][be];
                    g_inv[al][be] += s * e_up[a][al] * e_up[a][be];
                    for ga in 0..4 {
                        g_partials[ga][al][be] += s
                            * (e_down_partials[ga][a][al] * e_down[a][be]
                                + e_down[a][al] * e_down_partials[ga][a][be]);
                    }
                }
            }
        }

        let mut christoffel = [[[0.0; 4]; 4]; 4];
        for rho in 0..4 {
            for al in 0..4 {
                for be in 0..4 {
                    let mut s = 0.0;
                    for si in 0..4 {
                        s += g_inv[rho][si]
                            * (g_partials[al][si][be] + g_partials[be][si][al]
                                - g_partials[si][al][be]);
                    }
                    christoffel[rho][al][be] = 0.5 * s;
                }
            }
        }

        let mut cov = [[[0.0; 4]; 4]; 4];
        for a in 0..4 {
            for be in 0..4 {
                for al in 0..4 {
                    let mut s = e_down_partials[al][a][be];
                    for rho in 0..4 {
                        s -= christoffel[rho][be][al] * e_down[a][rho];
                    }
                    cov[a][be][al] = s;
                }
            }
        }

        Ok(FrameJet {
            point: *point,
            e_up: *e_up,
            e_up_partials: *partials,
            e_down,
            e_down_partials,
            g,
            g_inv,
            g_partials,
            christoffel,
            cov_deriv_down: cov,
        })
    }

    /// `max |g_alphabeta e_(a)^alpha e_(b)^beta - eta_ab|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut m = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let mut s = 0.0;
                for al in 0..4 {
                    for be in 0..4 {
                        s += self.g[al][be] * self.e_up[a][al] * self.e_up[b][be];
                    }
                }
                let eta = if a == b { ETA_DIAG[a] } else { 0.0 };
                m = m.max((s - eta).abs());
            }
        }
        m
    }

    /// `max |g_alphabeta;gamma|` relative to the size of the metric partials.
    pub fn metric_compatibility_residual(&self) -> f64 {
        let mut m = 0.0_f64;
        for ga in 0..4 {
            for al in 0..4 {
                for be in 0..4 {
                    let mut s = self.g_partials[ga][al][be];
                    for rho in 0..4 {
                        s -= self.christoffel[rho][al][ga] * self.g[rho][be]
                            + self.christoffel[rho][be][ga] * self.g[al][rho];
                    }
                    m = m.max(s.abs());
                }
            }
        }
        m
    }

    /// Frame components of a covector: `A_a = e_(a)^alpha A_alpha`.
    pub fn frame_components(&self, covector: &Vec4) -> Vec4 {
        let mut out = [0.0; 4];
        for (a, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|al| self.e_up[a][al] * covector[al]).sum();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::builtin;
    use super::*;

    #[test]
    fn spherical_christoffels() {
        let f = builtin::geometry("minkowski_spherical_diagonal").unwrap();
        let (r, th) = (2.0, 0.7);
        let fj = frame_at(&f, &[0.0, r, th, 0.3]).unwrap();
        let gam = &fj.christoffel;
        assert!((gam[1][2][2] + r).abs() < 1e-14);
        assert!((gam[1][3][3] + r * th.sin().powi(2)).abs() < 1e-14);
        assert!((gam[2][1][2] - 1.0 / r).abs() < 1e-14);
        assert!((gam[2][3][3] + th.sin() * th.cos()).abs() < 1e-14);
        assert!((gam[3][2][3] - th.cos() / th.sin()).abs() < 1e-14);
        assert!((fj.g[3][3] + (r * th.sin()).powi(2)).abs() < 1e-14);
        assert!(fj.orthonormality_residual() < 1e-14);
        assert!(fj.metric_compatibility_residual() < 1e-14);
    }

    #[test]
    fn schwarzschild_christoffel_against_closed_form() {
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        let r = 5.0;
        let fj = frame_at(&f, &[0.0, r, 1.0, 0.0]).unwrap();
        // Gamma^t_tr = M / (r (r - 2M)) with M = 1
        assert!((fj.christoffel[0][0][1] - 1.0 / (r * (r - 2.0))).abs() < 1e-14);
        assert!((fj.christoffel[1][0][0] - (r - 2.0) / r.powi(3)).abs() < 1e-14);
    }

    #[test]
    fn fd_mode_matches_dual() {
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let p = [0.0, 1.7, 0.9, 0.4];
        let a = frame_at_with(&f, &p, DiffMode::Dual).unwrap();
        let b = frame_at_with(&f, &p, DiffMode::Fd).unwrap();
        for rho in 0..4 {
            for x in 0..4 {
                for y in 0..4 {
                    let d = a.christoffel[rho][x][y] - b.christoffel[rho][x][y];
                    assert!(d.abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn singular_and_domain_points() {
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        assert!(matches!(
            frame_at(&f, &[0.0, 2.0, 1.0, 0.0]),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            frame_at(&f, &[0.0, 1.0, 1.0, 0.0]),
            Err(Error::Domain { .. })
        ));
        let s = builtin::geometry("minkowski_spherical_diagonal").unwrap();
        assert!(frame_at(&s, &[0.0, 1.0, 0.0, 0.0]).is_err());
    }
}
