use super::Mat4;

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut r = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    r
}

pub fn transpose4(a: &Mat4) -> Mat4 {
    let mut r = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] = a[j][i];
        }
    }
    r
}

/// Gauss-Jordan inverse with partial pivoting. `None` if a pivot vanishes.
pub fn inverse4(a: &Mat4) -> Option<Mat4> {
    let mut m = *a;
    let mut inv = [[0.0; 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for col in 0..4 {
        let piv = (col..4).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))?;
        if m[piv][col] == 0.0 || !m[piv][col].is_finite() {
            return None;
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col];
        for j in 0..4 {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..4 {
            if r != col {
                let f = m[r][col];
                for j in 0..4 {
                    m[r][j] -= f * m[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    Some(inv)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det4(a: &Mat4) -> f64 {
    let mut m = *a;
    let mut det = 1.0;
    for col in 0..4 {
        let piv = (col..4)
            .max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))
            .unwrap_or(col);
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= m[col][col];
        for r in (col + 1)..4 {
            let f = m[r][col] / m[col][col];
            for j in col..4 {
                m[r][j] -= f * m[col][j];
            }
        }
    }
    det
}

fn norm_inf(a: &Mat4) -> f64 {
    a.iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Infinity-norm condition number; infinite for singular matrices.
pub fn condition_number(a: &Mat4) -> f64 {
    match inverse4(a) {
        Some(inv) => norm_inf(a) * norm_inf(&inv),
        None => f64::INFINITY,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = [
            [2.0, 0.3, 0.0, 1.0],
            [0.1, 1.5, -0.2, 0.0],
            [0.0, 0.4, 3.0, 0.2],
            [1.0, 0.0, 0.0, 0.5],
        ];
        let inv = inverse4(&a).unwrap();
        let p = mat4_mul(&a, &inv);
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((p[i][j] - e).abs() < 1e-14);
            }
        }
        assert!(condition_number(&a).is_finite());
    }

    #[test]
    fn singular_detected() {
        let mut a = [[0.0; 4]; 4];
        a[0][0] = 1.0;
        a[1][1] = 1.0;
        a[2][2] = 1.0;
        assert!(inverse4(&a).is_none());
        assert!(condition_number(&a).is_infinite());
    }
}
