use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[C64 { re: 0.0, im: 0.0 }; 2]; 2]);

    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        let one = C64::new(1.0, 0.0);
        let z = C64::new(0.0, 0.0);
        Mat2([[one, z], [z, one]])
    }

    pub fn det(&self) -> C64 {
        self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)]
    }

    pub fn trace(&self) -> C64 {
        self[(0, 0)] + self[(1, 1)]
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self[(0, 0)], self[(1, 0)], self[(0, 1)], self[(1, 1)])
    }

    pub fn conj(&self) -> Self {
        Mat2(self.0.map(|r| r.map(|z| z.conj())))
    }

    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    /// Inverse; callers guarantee a nonzero determinant.
    pub fn inverse(&self) -> Self {
        let d = self.det();
        Mat2::new(self[(1, 1)], -self[(0, 1)], -self[(1, 0)], self[(0, 0)]).scale(d.inv())
    }

    pub fn scale(&self, s: C64) -> Self {
        Mat2(self.0.map(|r| r.map(|z| z * s)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, o: &Mat2) -> f64 {
        (*self - *o).max_abs()
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let mut r = self;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] += o.0[i][j];
            }
        }
        r
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + (-o)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2(self.0.map(|r| r.map(|z| -z)))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let mut r = Mat2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j];
            }
        }
        r
    }
}

impl Mul<C64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: C64) -> Mat2 {
        self.scale(s)
    }
}
