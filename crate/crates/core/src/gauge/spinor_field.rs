use super::lorentz::{lorentz_from_matrix, LorentzMatrixJet, LorentzSource};
use crate::algebra::{Mat2, Vec4, C64};
use crate::error::{Error, Result};
use crate::exprlang::{parse, Expr, ParamSet};
use crate::geometry::{Chart, DiffMode};
use serde::{Deserialize, Serialize};

/// The spinor matrix `B = [[a, c], [d, b]]` and its partials at a point.
#[derive(Debug, Clone, Copy)]
pub struct SpinorJet {
    pub value: Mat2,
    pub partials: [Mat2; 4],
}

impl SpinorJet {
    pub fn a(&self) -> C64 {
        self.value[(0, 0)]
    }
    pub fn b(&self) -> C64 {
        self.value[(1, 1)]
    }
    pub fn c(&self) -> C64 {
        self.value[(0, 1)]
    }
    pub fn d(&self) -> C64 {
        self.value[(1, 0)]
    }

    /// `B^-1 = [[b, -c], [-d, a]]` (unit determinant).
    pub fn inverse(&self) -> Mat2 {
        Mat2::new(self.b(), -self.c(), -self.d(), self.a())
    }

    pub fn lorentz(&self) -> LorentzMatrixJet {
        lorentz_from_matrix(&self.value, &self.partials)
    }
}

/// An SL(2,C)-valued field.
#[derive(Debug, Clone)]
pub enum SpinorGaugeField {
    /// Entries as expressions in the chart coordinates.
    Expressions {
        a: Expr,
        b: Expr,
        c: Expr,
        d: Expr,
        params: ParamSet,
    },
    Constant(Mat2),
    /// `outer * inner`: `inner` is applied first.
    Product {
        outer: Box<SpinorGaugeField>,
        inner: Box<SpinorGaugeField>,
    },
}

const DET_TOL: f64 = 1e-10;

impl SpinorGaugeField {
    pub fn identity() -> Self {
        SpinorGaugeField::Constant(Mat2::identity())
    }

    /// The rotation taking the Cartesian frame to the spherical one,
    /// written in `x2 = theta`, `x3 = phi`.
    pub fn spherical() -> Self {
        Self::from_strings(
            "cos(x2/2)*exp(i*x3/2)",
            "cos(x2/2)*exp(-i*x3/2)",
            "sin(x2/2)*exp(-i*x3/2)",
            "-sin(x2/2)*exp(i*x3/2)",
            &Chart::new(["x0", "x1", "x2", "x3"]),
            ParamSet::default(),
        )
        .expect("builtin gauge parses")
    }

    /// Build from entry expressions; note the argument order `a, b, c, d`.
    pub fn from_strings(a: &str, b: &str, c: &str, d: &str, chart: &Chart, params: ParamSet) -> Result<Self> {
        params.validate(&chart.names)?;
        let p = |s: &str| -> Result<Expr> { parse(s)?.bind(&chart.names, &params) };
        Ok(SpinorGaugeField::Expressions {
            a: p(a)?,
            b: p(b)?,
            c: p(c)?,
            d: p(d)?,
            params: params.clone(),
        })
    }

    /// `other` applied after `self`.
    pub fn then(self, other: SpinorGaugeField) -> Self {
        SpinorGaugeField::Product {
            outer: Box::new(other),
            inner: Box::new(self),
        }
    }

    pub fn spinor_jet(&self, point: &Vec4, mode: DiffMode) -> Result<SpinorJet> {
        let jet = match self {
            SpinorGaugeField::Expressions { a, b, c, d, params } => {
                let ja = mode.eval(a, point, params)?;
                let jb = mode.eval(b, point, params)?;
                let jc = mode.eval(c, point, params)?;
                let jd = mode.eval(d, point, params)?;
                let mut partials = [Mat2::ZERO; 4];
                for (k, p) in partials.iter_mut().enumerate() {
                    *p = Mat2::new(ja.grad[k], jc.grad[k], jd.grad[k], jb.grad[k]);
                }
                SpinorJet {
                    value: Mat2::new(ja.value, jc.value, jd.value, jb.value),
                    partials,
                }
            }
            SpinorGaugeField::Constant(m) => SpinorJet {
                value: *m,
                partials: [Mat2::ZERO; 4],
            },
            SpinorGaugeField::Product { outer, inner } => {
                let o = outer.spinor_jet(point, mode)?;
                let i = inner.spinor_jet(point, mode)?;
                let mut partials = [Mat2::ZERO; 4];
                for (k, p) in partials.iter_mut().enumerate() {
                    *p = o.partials[k] * i.value + o.value * i.partials[k];
                }
                SpinorJet {
                    value: o.value * i.value,
                    partials,
                }
            }
        };
        let det = jet.value.det();
        if (det - C64::new(1.0, 0.0)).norm() > DET_TOL {
            return Err(Error::NotUnimodular {
                point: *point,
                det: format!("{det}"),
            });
        }
        Ok(jet)
    }
}

impl LorentzSource for SpinorGaugeField {
    fn lorentz_jet(&self, point: &Vec4, mode: DiffMode) -> Result<LorentzMatrixJet> {
        Ok(self.spinor_jet(point, mode)?.lorentz())
    }
}

/// JSON gauge description: `{"a": .., "b": .., "c": .., "d": .., "params": {..}}`
/// or `{"builtin": "spherical" | "identity"}`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(default)]
    pub params: ParamSet,
}

impl GaugeConfig {
    pub fn build(&self, chart: &Chart) -> Result<SpinorGaugeField> {
        match (&self.builtin, &self.a, &self.b, &self.c, &self.d) {
            (Some(name), None, None, None, None) => match name.as_str() {
                "identity" => Ok(SpinorGaugeField::identity()),
                "spherical" => Ok(SpinorGaugeField::spherical()),
                other => Err(Error::Config(format!(
                    "unknown builtin gauge `{other}` (known: identity, spherical)"
                ))),
            },
            (None, Some(a), Some(b), Some(c), Some(d)) => {
                SpinorGaugeField::from_strings(a, b, c, d, chart, self.params.clone())
            }
            _ => Err(Error::Config(
                "gauge needs either `builtin` or all of `a`, `b`, `c`, `d`".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use std::f64::consts::PI;

    #[test]
    fn spherical_entry_a() {
        let g = SpinorGaugeField::spherical();
        let j = g.spinor_jet(&[0.0, 1.0, PI / 2.0, 0.0], DiffMode::Dual).unwrap();
        assert!((j.a() - c((PI / 4.0).cos(), 0.0)).norm() < 1e-15);
        assert!((j.partials[2][(0, 0)] - c(-0.5 * (PI / 4.0).sin(), 0.0)).norm() < 1e-15);
        let l = j.lorentz();
        assert!(l.orthogonality_residual() < 1e-13);
    }

    #[test]
    fn non_unimodular_rejected() {
        let chart = Chart::new(["t", "x", "y", "z"]);
        let g = SpinorGaugeField::from_strings("2", "1", "0", "0", &chart, ParamSet::default()).unwrap();
        assert!(matches!(
            g.spinor_jet(&[0.0; 4], DiffMode::Dual),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn config_forms() {
        let chart = Chart::new(["t", "r", "th", "ph"]);
        let cfg: GaugeConfig = serde_json::from_str(
            r#"{"a": "cos(th/2)*exp(i*ph/2)", "b": "cos(th/2)*exp(-i*ph/2)",
                "c": "sin(th/2)*exp(-i*ph/2)", "d": "-sin(th/2)*exp(i*ph/2)"}"#,
        )
        .unwrap();
        let g = cfg.build(&chart).unwrap();
        let p = [0.0, 2.0, 0.7, 1.1];
        let a = g.spinor_jet(&p, DiffMode::Dual).unwrap();
        let b = SpinorGaugeField::spherical().spinor_jet(&p, DiffMode::Dual).unwrap();
        assert!(a.value.max_abs_diff(&b.value) < 1e-15);
        let bad: GaugeConfig = serde_json::from_str(r#"{"a": "1"}"#).unwrap();
        assert!(bad.build(&chart).is_err());
    }
}
