use super::{c, CMat4, Mat2, ETA_DIAG, ONE, ZERO};

/// `sigma^a = (1, sigma_x, sigma_y, sigma_z)`.
pub fn sigma(a: usize) -> Mat2 {
    match a {
        0 => Mat2::identity(),
        1 => Mat2::new(ZERO, ONE, ONE, ZERO),
        2 => Mat2::new(ZERO, c(0.0, -1.0), c(0.0, 1.0), ZERO),
        3 => Mat2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("sigma index {a} out of range"),
    }
}

/// `sigmabar^a = (1, -sigma_x, -sigma_y, -sigma_z)`.
pub fn sigma_bar(a: usize) -> Mat2 {
    if a == 0 {
        sigma(0)
    } else {
        -sigma(a)
    }
}

/// `sigma_a = eta_ab sigma^b`.
pub fn sigma_down(a: usize) -> Mat2 {
    sigma(a).scale(c(ETA_DIAG[a], 0.0))
}

pub fn sigma_bar_down(a: usize) -> Mat2 {
    sigma_bar(a).scale(c(ETA_DIAG[a], 0.0))
}

/// The spinor metric `eps = -i sigma^2 = [[0,-1],[1,0]]`.
pub fn pauli_eps() -> Mat2 {
    Mat2::new(ZERO, -ONE, ONE, ZERO)
}

/// Chiral Dirac matrices `gamma^a = [[0, sigmabar^a], [sigma^a, 0]]`.
pub fn dirac_gamma(a: usize) -> CMat4 {
    let mut g = [[ZERO; 4]; 4];
    let s = sigma(a);
    let sb = sigma_bar(a);
    for i in 0..2 {
        for j in 0..2 {
            g[i][j + 2] = sb[(i, j)];
            g[i + 2][j] = s[(i, j)];
        }
    }
    g
}

/// `gamma5 = -i gamma0 gamma1 gamma2 gamma3 = diag(-1,-1,1,1)`.
pub fn gamma5() -> CMat4 {
    let p = dirac_gamma(0)
        .mul(&dirac_gamma(1))
        .mul(&dirac_gamma(2))
        .mul(&dirac_gamma(3));
    p.scale(c(0.0, -1.0))
}

/// `sigma^{ab} = 1/4 (gamma^a gamma^b - gamma^b gamma^a)`.
pub fn sigma_ab(a: usize, b: usize) -> CMat4 {
    let ab = dirac_gamma(a).mul(&dirac_gamma(b));
    let ba = dirac_gamma(b).mul(&dirac_gamma(a));
    ab.add(&ba.scale(c(-1.0, 0.0))).scale(c(0.25, 0.0))
}

/// Small helpers on 4x4 complex matrices.
pub trait CMat4Ext {
    fn mul(&self, o: &CMat4) -> CMat4;
    fn add(&self, o: &CMat4) -> CMat4;
    fn scale(&self, s: num_complex::Complex64) -> CMat4;
    fn identity() -> CMat4;
    fn max_abs(&self) -> f64;
}

impl CMat4Ext for CMat4 {
    fn mul(&self, o: &CMat4) -> CMat4 {
        let mut r = [[ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                r[i][j] = (0..4).map(|k| self[i][k] * o[k][j]).sum();
            }
        }
        r
    }

    fn add(&self, o: &CMat4) -> CMat4 {
        let mut r = *self;
        for i in 0..4 {
            for j in 0..4 {
                r[i][j] += o[i][j];
            }
        }
        r
    }

    fn scale(&self, s: num_complex::Complex64) -> CMat4 {
        self.map(|r| r.map(|z| z * s))
    }

    fn identity() -> CMat4 {
        let mut r = [[ZERO; 4]; 4];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = ONE;
        }
        r
    }

    fn max_abs(&self) -> f64 {
        self.iter().flatten().fold(0.0_f64, |m, z| m.max(z.norm()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma5_is_chiral_diagonal() {
        let g5 = gamma5();
        let expect = [-1.0, -1.0, 1.0, 1.0];
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { expect[i] } else { 0.0 };
                assert!((g5[i][j] - c(e, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn eps_squares_to_minus_one() {
        let e = pauli_eps();
        assert!((e * e + Mat2::identity()).max_abs() < 1e-15);
        assert!((e - sigma(2).scale(c(0.0, -1.0))).max_abs() < 1e-15);
    }
}
