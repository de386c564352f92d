//! Seeded random geometries, gauges, points and synthetic tensors for the
//! check suites and tests.

use crate::algebra::{Mat2, Tensor3, Vec4, C64};
use crate::exprlang::{parse_bound, ParamSet};
use crate::gauge::SpinorGaugeField;
use crate::geometry::{Chart, TetradField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Per-coordinate sampling ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleBox(pub [(f64, f64); 4]);

impl SampleBox {
    pub const CARTESIAN: SampleBox = SampleBox([(-3.0, 3.0); 4]);

    pub fn spherical(r_min: f64, r_max: f64) -> Self {
        SampleBox([(-5.0, 5.0), (r_min, r_max), (0.2, PI - 0.2), (-PI, PI)])
    }

    /// A box inside the domain of a builtin geometry (`r` in (3, 50) outside
    /// the horizon for Schwarzschild).
    pub fn for_geometry(field: &TetradField) -> Self {
        match field.chart.names[1].as_str() {
            "r" if field.name.starts_with("schwarzschild") => {
                let m = field.params.get("M").unwrap_or(1.0);
                SampleBox::spherical(3.0 * m, 50.0 * m)
            }
            "r" => SampleBox::spherical(0.5, 10.0),
            _ => SampleBox::CARTESIAN,
        }
    }
}

/// A deterministic source of random test data.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

fn lit(x: f64) -> String {
    format!("({x:.6})")
}

fn clit(z: C64) -> String {
    format!("({:.6} + {:.6}*i)", z.re, z.im)
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn complex(&mut self, scale: f64) -> C64 {
        C64::new(self.uniform(-scale, scale), self.uniform(-scale, scale))
    }

    pub fn point(&mut self, b: &SampleBox) -> Vec4 {
        b.0.map(|(lo, hi)| self.uniform(lo, hi))
    }

    pub fn points(&mut self, b: &SampleBox, n: usize) -> Vec<Vec4> {
        (0..n).map(|_| self.point(b)).collect()
    }

    /// A smooth bounded real expression in `x0..x3`.
    fn smooth(&mut self, amp: f64) -> String {
        let (c1, c2) = (self.uniform(-amp, amp), self.uniform(-amp, amp));
        let k: Vec<f64> = (0..4).map(|_| self.uniform(-1.0, 1.0)).collect();
        let i = self.rng.gen_range(0..4);
        let j = self.rng.gen_range(0..4);
        format!(
            "{}*sin({}*x{i} + {}*x{j}) + {}*cos({}*x{} - {}*x{})",
            lit(c1),
            lit(k[0]),
            lit(k[1]),
            lit(c2),
            lit(k[2]),
            (i + 1) % 4,
            lit(k[3]),
            (j + 2) % 4
        )
    }

    /// A diagonal tetrad with `h_a = exp(smooth)` on a Cartesian-like chart.
    pub fn diagonal_geometry(&mut self) -> TetradField {
        let chart = Chart::new(["x0", "x1", "x2", "x3"]);
        let h: [_; 4] = std::array::from_fn(|_| {
            let s = format!("exp({})", self.smooth(0.4));
            parse_bound(&s, &chart.names, &ParamSet::default()).expect("generated expression")
        });
        TetradField::diagonal("random_diagonal", chart, ParamSet::default(), h)
    }

    /// A full tetrad `e_(a)^alpha = delta + small smooth perturbation`.
    pub fn full_geometry(&mut self) -> TetradField {
        let chart = Chart::new(["x0", "x1", "x2", "x3"]);
        let e: [[_; 4]; 4] = std::array::from_fn(|a| {
            std::array::from_fn(|al| {
                let base = if a == al { "1 + " } else { "" };
                let s = format!("{base}{}", self.smooth(0.15));
                parse_bound(&s, &chart.names, &ParamSet::default()).expect("generated expression")
            })
        });
        TetradField::full("random_full", chart, ParamSet::default(), e)
    }

    /// An SL(2,C) field `a = E + pq/E, c = p/E, d = q/E, b = 1/E` with
    /// `E = exp(w)` and smooth complex `w, p, q`, written in `chart`'s
    /// coordinates.
    pub fn gauge(&mut self, chart: &Chart) -> SpinorGaugeField {
        let mut field = || {
            let s = format!("{}*({}) + {}", clit(self.complex(0.5)), self.smooth(1.0), clit(self.complex(0.3)));
            (0..4).fold(s, |s, k| s.replace(&format!("x{k}"), &chart.names[k]))
        };
        let (w, p, q) = (field(), field(), field());
        let e = format!("exp({w})");
        SpinorGaugeField::from_strings(
            &format!("{e} + ({p})*({q})/{e}"),
            &format!("1/{e}"),
            &format!("({p})/{e}"),
            &format!("({q})/{e}"),
            chart,
            ParamSet::default(),
        )
        .expect("generated gauge")
    }

    /// A constant SL(2,C) matrix of the same form.
    pub fn constant_gauge(&mut self) -> SpinorGaugeField {
        let e = (self.complex(0.5)).exp();
        let p = self.complex(0.8);
        let q = self.complex(0.8);
        SpinorGaugeField::Constant(Mat2::new(e + p * q / e, p / e, q / e, 1.0 / e))
    }

    /// A random tensor antisymmetric in its first two indices.
    pub fn antisymmetric_gamma(&mut self) -> Tensor3 {
        let mut t = [[[0.0; 4]; 4]; 4];
        for a in 0..4 {
            for b in (a + 1)..4 {
                for c in 0..4 {
                    let v = self.uniform(-1.0, 1.0);
                    t[a][b][c] = v;
                    t[b][a][c] = -v;
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{frame_at, DiffMode};

    #[test]
    fn deterministic() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        assert_eq!(a.points(&SampleBox::CARTESIAN, 3), b.points(&SampleBox::CARTESIAN, 3));
    }

    #[test]
    fn generated_fields_evaluate() {
        let mut s = Sampler::new(1);
        let p = s.point(&SampleBox::CARTESIAN);
        let d = s.diagonal_geometry();
        assert!(frame_at(&d, &p).unwrap().orthonormality_residual() < 1e-12);
        let f = s.full_geometry();
        assert!(frame_at(&f, &p).unwrap().orthonormality_residual() < 1e-12);
        let g = s.gauge(&d.chart);
        let j = g.spinor_jet(&p, DiffMode::Dual).unwrap();
        assert!((j.value.det() - 1.0).norm() < 1e-12);
        let c = s.constant_gauge();
        assert!((c.spinor_jet(&p, DiffMode::Dual).unwrap().value.det() - 1.0).norm() < 1e-12);
    }
}
