use crate::algebra::{Jet, Mat4, Vec4};
use crate::error::{Error, Result};
use crate::exprlang::{eval_fd, eval_jet, Expr, ParamSet};
use crate::gauge::LorentzSource;
use crate::tolerance;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// How partial derivatives are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiffMode {
    #[default]
    Dual,
    Fd,
}

impl DiffMode {
    pub fn tolerance(self) -> f64 {
        match self {
            DiffMode::Dual => tolerance::DUAL,
            DiffMode::Fd => tolerance::FD,
        }
    }

    pub fn eval(self, e: &Expr, point: &Vec4, params: &ParamSet) -> Result<Jet> {
        match self {
            DiffMode::Dual => eval_jet(e, point, params),
            DiffMode::Fd => eval_fd(e, point, params, tolerance::FD_STEP),
        }
    }
}

/// Coordinate names plus optional open intervals the coordinates must lie in.
#[derive(Debug, Clone, PartialEq)]
pub struct Chart {
    pub names: [String; 4],
    pub domains: [Option<(f64, f64)>; 4],
}

impl Chart {
    pub fn new(names: [&str; 4]) -> Self {
        Chart {
            names: names.map(String::from),
            domains: [None; 4],
        }
    }

    pub fn with_domain(mut self, i: usize, lo: f64, hi: f64) -> Self {
        self.domains[i] = Some((lo, hi));
        self
    }

    pub fn check(&self, point: &Vec4) -> Result<()> {
        for i in 0..4 {
            if !point[i].is_finite() {
                return Err(Error::Domain {
                    expr: self.names[i].clone(),
                    point: *point,
                    reason: "coordinate is not finite".into(),
                });
            }
            if let Some((lo, hi)) = self.domains[i] {
                if point[i] <= lo || point[i] >= hi {
                    return Err(Error::Domain {
                        expr: self.names[i].clone(),
                        point: *point,
                        reason: format!("coordinate outside ({lo}, {hi})"),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone)]
pub enum TetradKind {
    /// Coframe scale factors: `e^(a)_alpha = h_a delta^a_alpha`.
    Diagonal { h: [Expr; 4] },
    /// Rows are the frame vectors `e_(a)^alpha`.
    Full { e: [[Expr; 4]; 4] },
    /// `e'_(a) = L_a^b e_(b)` for a local Lorentz field `L`.
    Gauged {
        base: Box<TetradField>,
        lorentz: Arc<dyn LorentzSource>,
    },
}

impl fmt::Debug for TetradKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TetradKind::Diagonal { h } => {
                let h: Vec<String> = h.iter().map(|e| e.to_string()).collect();
                f.debug_struct("Diagonal").field("h", &h).finish()
            }
            TetradKind::Full { e } => {
                let e: Vec<Vec<String>> = e
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect();
                f.debug_struct("Full").field("e", &e).finish()
            }
            TetradKind::Gauged { base, lorentz } => f
                .debug_struct("Gauged")
                .field("base", base)
                .field("lorentz", lorentz)
                .finish(),
        }
    }
}

/// Frame vector components and their partials at a point:
/// `e_up[a][alpha] = e_(a)^alpha`, `partials[beta][a][alpha] = d_beta e_(a)^alpha`.
#[derive(Debug, Clone, Copy)]
pub struct TetradJet {
    pub e_up: Mat4,
    pub partials: [Mat4; 4],
}

#[derive(Debug, Clone)]
pub struct TetradField {
    pub name: String,
    pub chart: Chart,
    pub params: ParamSet,
    pub kind: TetradKind,
    pub em_potential: Option<[Expr; 4]>,
}

fn real_part(j: &Jet, row: usize, col: usize, point: &Vec4) -> Result<(f64, Vec4)> {
    let small = |z: num_complex::Complex64, scale: f64| z.im.abs() <= 1e-12 * scale.max(1.0);
    let scale = j.value.re.abs() + j.grad.iter().map(|g| g.re.abs()).sum::<f64>();
    if !small(j.value, scale) || j.grad.iter().any(|g| !small(*g, scale)) {
        return Err(Error::ComplexTetrad {
            row,
            col,
            point: *point,
        });
    }
    Ok((j.value.re, j.grad.map(|g| g.re)))
}

impl TetradField {
    pub fn diagonal(name: &str, chart: Chart, params: ParamSet, h: [Expr; 4]) -> Self {
        TetradField {
            name: name.to_string(),
            chart,
            params,
            kind: TetradKind::Diagonal { h },
            em_potential: None,
        }
    }

    pub fn full(name: &str, chart: Chart, params: ParamSet, e: [[Expr; 4]; 4]) -> Self {
        TetradField {
            name: name.to_string(),
            chart,
            params,
            kind: TetradKind::Full { e },
            em_potential: None,
        }
    }

    /// This tetrad rotated by a local Lorentz field.
    pub fn gauged(&self, lorentz: Arc<dyn LorentzSource>) -> Self {
        TetradField {
            name: format!("{}+gauge", self.name),
            chart: self.chart.clone(),
            params: self.params.clone(),
            kind: TetradKind::Gauged {
                base: Box::new(self.clone()),
                lorentz,
            },
            em_potential: self.em_potential.clone(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.kind, TetradKind::Diagonal { .. })
    }

    /// Frame components and partials at `point`.
    pub fn tetrad_jet(&self, point: &Vec4, mode: DiffMode) -> Result<TetradJet> {
        self.chart.check(point)?;
        let mut out = TetradJet {
            e_up: [[0.0; 4]; 4],
            partials: [[[0.0; 4]; 4]; 4],
        };
        match &self.kind {
            TetradKind::Diagonal { h } => {
                for a in 0..4 {
                    let j = mode.eval(&h[a], point, &self.params)?;
                    let (v, d) = real_part(&j, a, a, point)?;
                    if v.abs() < 1e-300 {
                        return Err(Error::SingularTetrad {
                            point: *point,
                            condition: f64::INFINITY,
                        });
                    }
                    out.e_up[a][a] = 1.0 / v;
                    for b in 0..4 {
                        out.partials[b][a][a] = -d[b] / (v * v);
                    }
                }
            }
            TetradKind::Full { e } => {
                for a in 0..4 {
                    for al in 0..4 {
                        let j = mode.eval(&e[a][al], point, &self.params)?;
                        let (v, d) = real_part(&j, a, al, point)?;
                        out.e_up[a][al] = v;
                        for b in 0..4 {
                            out.partials[b][a][al] = d[b];
                        }
                    }
                }
            }
            TetradKind::Gauged { base, lorentz } => {
                let bj = base.tetrad_jet(point, mode)?;
                let lj = lorentz.lorentz_jet(point, mode)?;
                for a in 0..4 {
                    for al in 0..4 {
                        let mut v = 0.0;
                        let mut d = [0.0; 4];
                        for b in 0..4 {
                            v += lj.value[a][b] * bj.e_up[b][al];
                            for (be, dv) in d.iter_mut().enumerate() {
                                *dv += lj.partials[be][a][b] * bj.e_up[b][al]
                                    + lj.value[a][b] * bj.partials[be][b][al];
                            }
                        }
                        out.e_up[a][al] = v;
                        for be in 0..4 {
                            out.partials[be][a][al] = d[be];
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coordinate components `A_alpha` of the electromagnetic potential.
    pub fn em_potential_at(&self, point: &Vec4) -> Result<Option<Vec4>> {
        let Some(a) = &self.em_potential else {
            return Ok(None);
        };
        let mut out = [0.0; 4];
        for i in 0..4 {
            let j = DiffMode::Dual.eval(&a[i], point, &self.params)?;
            out[i] = real_part(&j, 4, i, point)?.0;
        }
        Ok(Some(out))
    }
}
