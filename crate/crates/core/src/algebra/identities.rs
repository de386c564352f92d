use super::{
    c, dirac_gamma, gamma5, levi_civita, sigma, sigma_ab, sigma_bar, CMat4, CMat4Ext, Vec4, ETA_DIAG,
};
use serde::Serialize;

/// Sign conventions under test. `standard()` is the one the crate uses;
/// other values exist so the identity checks can be shown to reject them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conventions {
    pub metric: Vec4,
    pub eps_sign: f64,
}

impl Conventions {
    pub fn standard() -> Self {
        Conventions {
            metric: ETA_DIAG,
            eps_sign: 1.0,
        }
    }

    fn eta(&self, a: usize, b: usize) -> f64 {
        if a == b {
            self.metric[a]
        } else {
            0.0
        }
    }

    fn eps(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        self.eps_sign * levi_civita(a, b, c, d)
    }
}

/// Largest residual of each algebraic identity.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IdentityResiduals {
    pub anticommutator: f64,
    pub triple_product: f64,
    pub trace_sigma_first: f64,
    pub trace_sigma_bar_first: f64,
    pub trace_pair: f64,
    pub epsilon_contraction: f64,
}

/// Triple-product and `gamma^c sigma^{ab}` identities, standard conventions.
pub fn clifford_identity_residual() -> f64 {
    let r = identity_residuals(&Conventions::standard());
    r.anticommutator.max(r.triple_product)
}

/// Pauli trace formulas, standard conventions.
pub fn pauli_trace_residual() -> f64 {
    let r = identity_residuals(&Conventions::standard());
    r.trace_sigma_first.max(r.trace_sigma_bar_first).max(r.trace_pair)
}

impl IdentityResiduals {
    pub fn max(&self) -> f64 {
        [
            self.anticommutator,
            self.triple_product,
            self.trace_sigma_first,
            self.trace_sigma_bar_first,
            self.trace_pair,
            self.epsilon_contraction,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

fn diff(a: &CMat4, b: &CMat4) -> f64 {
    a.add(&b.scale(c(-1.0, 0.0))).max_abs()
}

/// Evaluate the Clifford, Pauli-trace and Levi-Civita identities.
pub fn identity_residuals(conv: &Conventions) -> IdentityResiduals {
    let g: Vec<CMat4> = (0..4).map(dirac_gamma).collect();
    let g5 = gamma5();
    let id = <CMat4 as CMat4Ext>::identity();
    let mut anti = 0.0_f64;
    let mut triple = 0.0_f64;
    for a in 0..4 {
        for b in 0..4 {
            let lhs = g[a].mul(&g[b]).add(&g[b].mul(&g[a]));
            anti = anti.max(diff(&lhs, &id.scale(c(2.0 * conv.eta(a, b), 0.0))));
            for cc in 0..4 {
                let lhs = g[a].mul(&g[b]).mul(&g[cc]);
                let mut rhs = g[cc]
                    .scale(c(conv.eta(a, b), 0.0))
                    .add(&g[a].scale(c(conv.eta(b, cc), 0.0)))
                    .add(&g[b].scale(c(-conv.eta(a, cc), 0.0)));
                for k in 0..4 {
                    let coef = conv.eps(cc, a, b, k) * conv.metric[k];
                    if coef != 0.0 {
                        rhs = rhs.add(&g5.mul(&g[k]).scale(c(0.0, coef)));
                    }
                }
                triple = triple.max(diff(&lhs, &rhs));
                let lhs = g[a].mul(&sigma_ab(b, cc));
                let mut rhs = g[cc]
                    .scale(c(0.5 * conv.eta(a, b), 0.0))
                    .add(&g[b].scale(c(-0.5 * conv.eta(a, cc), 0.0)));
                for k in 0..4 {
                    let coef = 0.5 * conv.eps(a, b, cc, k) * conv.metric[k];
                    if coef != 0.0 {
                        rhs = rhs.add(&g5.mul(&g[k]).scale(c(0.0, coef)));
                    }
                }
                triple = triple.max(diff(&lhs, &rhs));
            }
        }
    }

    let low = |a: usize| conv.metric[a];
    let eps_low = |a: usize, b: usize, cc: usize, d: usize| {
        conv.eps(a, b, cc, d) * low(a) * low(b) * low(cc) * low(d)
    };
    let s_d = |a: usize| sigma(a).scale(c(low(a), 0.0));
    let sb_d = |a: usize| sigma_bar(a).scale(c(low(a), 0.0));
    let mut t1 = 0.0_f64;
    let mut t2 = 0.0_f64;
    let mut t0 = 0.0_f64;
    for k in 0..4 {
        for l in 0..4 {
            let tr = (sb_d(k) * s_d(l)).trace();
            t0 = t0.max((tr - c(2.0 * conv.eta(k, l), 0.0)).norm());
            for a in 0..4 {
                for b in 0..4 {
                    let sym = 2.0
                        * (conv.eta(k, l) * conv.eta(a, b) - conv.eta(k, a) * conv.eta(l, b)
                            + conv.eta(k, b) * conv.eta(l, a));
                    let e = 2.0 * eps_low(k, l, a, b);
                    let s1 = (sb_d(k) * s_d(l) * sb_d(a) * s_d(b)).trace();
                    let s2 = (s_d(k) * sb_d(l) * s_d(a) * sb_d(b)).trace();
                    t1 = t1.max((s1 - c(sym, -e)).norm());
                    t2 = t2.max((s2 - c(sym, e)).norm());
                }
            }
        }
    }

    let mut contraction = 0.0_f64;
    for m in 0..4 {
        for n in 0..4 {
            let mut s = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    for cc in 0..4 {
                        s += conv.eps(a, b, cc, m) * low(m) * eps_low(a, b, cc, n) * low(n);
                    }
                }
            }
            let expect = if m == n { -6.0 } else { 0.0 };
            contraction = contraction.max((s - expect).abs());
        }
    }

    IdentityResiduals {
        anticommutator: anti,
        triple_product: triple,
        trace_sigma_first: t1,
        trace_sigma_bar_first: t2,
        trace_pair: t0,
        epsilon_contraction: contraction,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_conventions_hold_exactly() {
        let r = identity_residuals(&Conventions::standard());
        assert!(r.max() < 1e-14, "{r:?}");
    }

    #[test]
    fn trace_example() {
        let low = |a: usize| sigma_bar(a).scale(c(ETA_DIAG[a], 0.0));
        let lo = |a: usize| sigma(a).scale(c(ETA_DIAG[a], 0.0));
        let t = (low(1) * lo(2) * low(1) * lo(2)).trace();
        assert!((t - c(-2.0, 0.0)).norm() < 1e-15);
        assert!(((low(0) * lo(0)).trace() - c(2.0, 0.0)).norm() < 1e-15);
        assert!(clifford_identity_residual() < 1e-14);
        assert!(pauli_trace_residual() < 1e-14);
    }

    #[test]
    fn flipped_epsilon_rejected() {
        let conv = Conventions {
            eps_sign: -1.0,
            ..Conventions::standard()
        };
        let r = identity_residuals(&conv);
        assert!(r.triple_product > 0.5);
        assert!(r.trace_sigma_first > 0.5);
    }

    #[test]
    fn mostly_plus_metric_rejected() {
        let conv = Conventions {
            metric: [-1.0, 1.0, 1.0, 1.0],
            eps_sign: 1.0,
        };
        let r = identity_residuals(&conv);
        assert!(r.anticommutator > 0.5);
        assert!(r.trace_pair > 0.5);
    }
}
