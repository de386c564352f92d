use crate::algebra::{det4, sigma_bar, sigma_down, Mat2, Mat4, Vec4, ETA_DIAG};
use crate::error::Result;
use crate::geometry::DiffMode;
use std::fmt::Debug;

/// A Lorentz matrix `L_a^b` (`value[a][b]`) with partials `partials[beta][a][b]`.
#[derive(Debug, Clone, Copy)]
pub struct LorentzMatrixJet {
    pub value: Mat4,
    pub partials: [Mat4; 4],
    pub det_sign: f64,
}

/// Anything that yields a local Lorentz rotation at a point.
pub trait LorentzSource: Debug + Send + Sync {
    fn lorentz_jet(&self, point: &Vec4, mode: DiffMode) -> Result<LorentzMatrixJet>;
}

impl LorentzMatrixJet {
    pub fn constant(value: Mat4) -> Self {
        let det = det4(&value);
        LorentzMatrixJet {
            value,
            partials: [[[0.0; 4]; 4]; 4],
            det_sign: det.signum(),
        }
    }

    /// `|L eta L^T - eta|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let l = &self.value;
        let mut m = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let s: f64 = (0..4).map(|k| l[a][k] * ETA_DIAG[k] * l[b][k]).sum();
                let e = if a == b { ETA_DIAG[a] } else { 0.0 };
                m = m.max((s - e).abs());
            }
        }
        m
    }

    pub fn det(&self) -> f64 {
        det4(&self.value)
    }
}

/// `L_c^b = 1/2 Re Tr(sigma_c B sigmabar^b B^dagger)` and its partials.
pub fn lorentz_from_matrix(b: &Mat2, db: &[Mat2; 4]) -> LorentzMatrixJet {
    let bd = b.dagger();
    let mut value = [[0.0; 4]; 4];
    let mut partials = [[[0.0; 4]; 4]; 4];
    for bb in 0..4 {
        let sb = sigma_bar(bb);
        let m = *b * sb * bd;
        let dm: Vec<Mat2> = (0..4)
            .map(|be| db[be] * sb * bd + *b * sb * db[be].dagger())
            .collect();
        for c in 0..4 {
            let sc = sigma_down(c);
            value[c][bb] = 0.5 * (sc * m).trace().re;
            for be in 0..4 {
                partials[be][c][bb] = 0.5 * (sc * dm[be]).trace().re;
            }
        }
    }
    let det_sign = det4(&value).signum();
    LorentzMatrixJet {
        value,
        partials,
        det_sign,
    }
}

/// A constant Lorentz matrix; may be improper.
#[derive(Debug, Clone, Copy)]
pub struct ConstantLorentz(pub Mat4);

impl LorentzSource for ConstantLorentz {
    fn lorentz_jet(&self, _point: &Vec4, _mode: DiffMode) -> Result<LorentzMatrixJet> {
        Ok(LorentzMatrixJet::constant(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, Mat2};

    #[test]
    fn identity_spinor_gives_identity() {
        let l = lorentz_from_matrix(&Mat2::identity(), &[Mat2::ZERO; 4]);
        for a in 0..4 {
            for b in 0..4 {
                let e = if a == b { 1.0 } else { 0.0 };
                assert!((l.value[a][b] - e).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn random_constant_spinor_is_proper_orthochronous() {
        let a = c(1.2, 0.3);
        let cc = c(-0.4, 0.7);
        let d = c(0.5, -0.2);
        let b = (c(1.0, 0.0) + cc * d) / a;
        let m = Mat2::new(a, cc, d, b);
        assert!((m.det() - c(1.0, 0.0)).norm() < 1e-14);
        let l = lorentz_from_matrix(&m, &[Mat2::ZERO; 4]);
        assert!(l.orthogonality_residual() < 1e-13);
        assert!((l.det() - 1.0).abs() < 1e-12);
        assert!(l.value[0][0] >= 1.0);
    }
}
