use super::null_frame::{Leg, NullFrameJet};
use crate::algebra::{c, sigma_ab, CMat4, CMat4Ext, Mat2, C64, ZERO};
use crate::geometry::FrameJet;

/// Spinor connections `(Sigma_alpha, Sigmabar_alpha)` for `alpha = 0..3`,
/// the blocks acting on the two chiral halves.
pub fn sigma_connections(nf: &NullFrameJet) -> ([Mat2; 4], [Mat2; 4]) {
    let mut s = [Mat2::ZERO; 4];
    let mut sb = [Mat2::ZERO; 4];
    for al in 0..4 {
        let d = 0.5 * (nf.contract_first(Leg::L, Leg::N, al) + nf.contract_first(Leg::M, Leg::MBar, al));
        s[al] = Mat2::new(
            -d,
            nf.contract_first(Leg::N, Leg::M, al),
            nf.contract_first(Leg::L, Leg::MBar, al),
            d,
        );
        let db = 0.5 * (nf.contract_first(Leg::L, Leg::N, al) + nf.contract_first(Leg::MBar, Leg::M, al));
        sb[al] = Mat2::new(
            db,
            -nf.contract_first(Leg::L, Leg::M, al),
            -nf.contract_first(Leg::N, Leg::MBar, al),
            -db,
        );
    }
    (s, sb)
}

/// `1/2 sigma^{ab} e_(a)^beta e_(b)beta;alpha` in the chiral basis.
pub fn bispinor_connection(frame: &FrameJet, alpha: usize) -> CMat4 {
    let mut out: CMat4 = [[ZERO; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let w: f64 = (0..4)
                .map(|be| frame.e_up[a][be] * frame.cov_deriv_down[b][be][alpha])
                .sum();
            if w != 0.0 {
                out = out.add(&sigma_ab(a, b).scale(c(0.5 * w, 0.0)));
            }
        }
    }
    out
}

/// Largest difference between the null-leg connections and the diagonal
/// blocks of the bispinor connection, including block traces.
pub fn sigma_connection_residual(frame: &FrameJet, nf: &NullFrameJet) -> f64 {
    let (s, sb) = sigma_connections(nf);
    let mut m = 0.0_f64;
    for al in 0..4 {
        let (up, low) = diagonal_blocks(&bispinor_connection(frame, al));
        m = m
            .max(s[al].max_abs_diff(&up))
            .max(sb[al].max_abs_diff(&low))
            .max(s[al].trace().norm())
            .max(sb[al].trace().norm());
    }
    m
}

/// Upper-left and lower-right 2x2 blocks of a 4x4 matrix.
pub(crate) fn diagonal_blocks(m: &CMat4) -> (Mat2, Mat2) {
    let blk = |o: usize| -> Mat2 {
        let z: C64 = ZERO;
        let mut b = Mat2::new(z, z, z, z);
        for i in 0..2 {
            for j in 0..2 {
                b[(i, j)] = m[i + o][j + o];
            }
        }
        b
    };
    (blk(0), blk(2))
}
