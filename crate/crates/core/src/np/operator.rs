use super::hat::HatComponents;
use super::null_frame::NullFrameJet;
use super::spin::SpinCoefficientSet;
use crate::algebra::{CVec4, C64, I, ONE, ZERO};
use serde::Serialize;
use std::f64::consts::SQRT_2;

/// One entry `direction^alpha d_alpha + scalar`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OperatorEntry {
    pub direction: CVec4,
    pub scalar: C64,
}

impl OperatorEntry {
    fn new(direction: CVec4, scalar: C64) -> Self {
        OperatorEntry { direction, scalar }
    }

    fn scaled(&self, s: C64) -> Self {
        OperatorEntry {
            direction: self.direction.map(|z| z * s),
            scalar: self.scalar * s,
        }
    }

    fn negated(&self) -> Self {
        self.scaled(-ONE)
    }
}

/// `overall_factor * [[e00, e01], [e10, e11]]` with first-order entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FirstOrderOperator2x2 {
    pub entries: [[OperatorEntry; 2]; 2],
    pub overall_factor: C64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Chirality {
    /// `sigma^a` block acting on the first two-spinor, with `+iC`.
    Upper,
    /// `sigmabar^a` block acting on the second two-spinor, with `-iC`.
    Lower,
}

impl FirstOrderOperator2x2 {
    /// Entries with the overall factor multiplied in.
    pub fn normalized(&self) -> [[OperatorEntry; 2]; 2] {
        self.entries.map(|row| row.map(|e| e.scaled(self.overall_factor)))
    }

    /// Largest entrywise difference after normalization.
    pub fn max_abs_diff(&self, o: &FirstOrderOperator2x2) -> f64 {
        let a = self.normalized();
        let b = o.normalized();
        let mut m = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((a[i][j].scalar - b[i][j].scalar).norm());
                for al in 0..4 {
                    m = m.max((a[i][j].direction[al] - b[i][j].direction[al]).norm());
                }
            }
        }
        m
    }
}

/// The operator `sigma^a X_a` (or `sigmabar^a X_a`) with
/// `X_a = i (e_(a) d + B_a +- i C_a) - charge A_a`, built by contracting the
/// Pauli matrices with the frame components.
pub fn assemble_dirac_bc(h: &HatComponents, charge: f64, chirality: Chirality) -> FirstOrderOperator2x2 {
    let (pauli, sign): (fn(usize) -> crate::algebra::Mat2, f64) = match chirality {
        Chirality::Upper => (crate::algebra::sigma, 1.0),
        Chirality::Lower => (crate::algebra::sigma_bar, -1.0),
    };
    // Frame components back from the hats: v_a = (h0+h1)/2, (h2+h3)/2, i(h2-h3)/2, (h0-h1)/2.
    let unhat = |h: &[C64; 4]| -> [C64; 4] {
        [
            (h[0] + h[1]) * 0.5,
            (h[2] + h[3]) * 0.5,
            (h[2] - h[3]) * I * 0.5,
            (h[0] - h[1]) * 0.5,
        ]
    };
    let b = unhat(&h.b_hat);
    let c = unhat(&h.c_hat);
    let a = unhat(&h.a_hat);
    let mut e = [[ZERO; 4]; 4];
    for al in 0..4 {
        let col = unhat(&[h.e_hat[0][al], h.e_hat[1][al], h.e_hat[2][al], h.e_hat[3][al]]);
        for k in 0..4 {
            e[k][al] = col[k];
        }
    }
    let mut entries = [[OperatorEntry::new([ZERO; 4], ZERO); 2]; 2];
    for k in 0..4 {
        let p = pauli(k);
        // X_a / i = e_(a) d + B_a + s i C_a + i charge A_a
        let scalar = b[k] + I * sign * c[k] + I * charge * a[k];
        for i in 0..2 {
            for j in 0..2 {
                let w = p[(i, j)];
                if w == ZERO {
                    continue;
                }
                let ent = &mut entries[i][j];
                for al in 0..4 {
                    ent.direction[al] += w * e[k][al];
                }
                ent.scalar += w * scalar;
            }
        }
    }
    FirstOrderOperator2x2 {
        entries,
        overall_factor: I,
    }
}

/// Both chiral blocks written with the null legs and spin coefficients.
pub fn assemble_dirac_np(
    nf: &NullFrameJet,
    s: &SpinCoefficientSet,
) -> (FirstOrderOperator2x2, FirstOrderOperator2x2) {
    let (l, n, m, mb) = (*nf.l(), *nf.n(), *nf.m(), *nf.m_bar());
    let x0 = s.l[2] - s.m[0];
    let x1 = s.m_bar[1] - s.n[2];
    let x2 = s.l[1] - s.m[2];
    let x3 = s.m_bar[2] - s.n[0];
    let factor = I * SQRT_2;
    let upper = FirstOrderOperator2x2 {
        entries: [
            [OperatorEntry::new(l, x0), OperatorEntry::new(m, x2)],
            [OperatorEntry::new(mb, x3), OperatorEntry::new(n, x1)],
        ],
        overall_factor: factor,
    };
    let lower = FirstOrderOperator2x2 {
        entries: [
            [
                OperatorEntry::new(n, x1.conj()),
                OperatorEntry::new(m, x3.conj()).negated(),
            ],
            [
                OperatorEntry::new(mb, x2.conj()).negated(),
                OperatorEntry::new(l, x0.conj()),
            ],
        ],
        overall_factor: factor,
    };
    (upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use crate::geometry::{builtin, frame_at};
    use crate::np::{hat_components, null_frame, spin_coefficients};
    use crate::ricci::ricci_at;

    #[test]
    fn assemblies_agree() {
        for name in ["schwarzschild_diagonal", "cartesian_in_spherical"] {
            let f = builtin::geometry(name).unwrap();
            let fj = frame_at(&f, &[0.0, 3.0, 1.1, 0.4]).unwrap();
            let r = ricci_at(&fj);
            let nf = null_frame(&fj);
            let h = hat_components(&r, &fj, None);
            let (up, low) = assemble_dirac_np(&nf, &spin_coefficients(&nf));
            assert!(up.max_abs_diff(&assemble_dirac_bc(&h, 0.0, Chirality::Upper)) < 1e-14);
            assert!(low.max_abs_diff(&assemble_dirac_bc(&h, 0.0, Chirality::Lower)) < 1e-14);
        }
    }

    #[test]
    fn bc_entries_follow_hat_pattern() {
        let mut h = HatComponents {
            b_hat: [c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.25), c(0.5, -0.25)],
            c_hat: [c(0.3, 0.0), c(-0.7, 0.0), c(0.1, 0.9), c(0.1, -0.9)],
            a_hat: [ZERO; 4],
            e_hat: [[ZERO; 4]; 4],
        };
        for k in 0..4 {
            h.e_hat[k][k] = c(1.0 + k as f64, 0.0);
        }
        let up = assemble_dirac_bc(&h, 0.0, Chirality::Upper);
        let pat = [[0, 2], [3, 1]];
        for i in 0..2 {
            for j in 0..2 {
                let k = pat[i][j];
                let ent = up.entries[i][j];
                assert!((ent.scalar - (h.b_hat[k] + I * h.c_hat[k])).norm() < 1e-15);
                assert!((ent.direction[k] - h.e_hat[k][k]).norm() < 1e-15);
            }
        }
        let low = assemble_dirac_bc(&h, 0.0, Chirality::Lower);
        let pat = [[(1, 1.0), (2, -1.0)], [(3, -1.0), (0, 1.0)]];
        for i in 0..2 {
            for j in 0..2 {
                let (k, s) = pat[i][j];
                let ent = low.entries[i][j];
                assert!((ent.scalar - (h.b_hat[k] - I * h.c_hat[k]) * s).norm() < 1e-15);
                assert!((ent.direction[k] - h.e_hat[k][k] * s).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn charge_shifts_scalars() {
        let h0 = HatComponents {
            b_hat: [ZERO; 4],
            c_hat: [ZERO; 4],
            a_hat: [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 1.0), c(3.0, -1.0)],
            e_hat: [[ZERO; 4]; 4],
        };
        let op = assemble_dirac_bc(&h0, 0.5, Chirality::Upper).normalized();
        assert!((op[0][0].scalar - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((op[0][1].scalar - c(-1.5, -0.5)).norm() < 1e-15);
    }
}
