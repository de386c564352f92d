use crate::algebra::Vec4;
use crate::error::{Error, Result};
use crate::exprlang::eval_constant;
use crate::gauge::GaugeConfig;
use crate::geometry::{Chart, DiffMode, GeometryConfig};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A coordinate value: a number or a constant expression such as `"pi/3"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Num(f64),
    Expr(String),
}

impl Coord {
    pub fn value(&self) -> Result<f64> {
        match self {
            Coord::Num(x) => Ok(*x),
            Coord::Expr(s) => eval_constant(s),
        }
    }
}

/// One grid axis: a fixed value or `count` evenly spaced values in `[min, max]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridAxis {
    Range { min: Coord, max: Coord, count: usize },
    Fixed(Coord),
}

impl GridAxis {
    pub fn values(&self) -> Result<Vec<f64>> {
        match self {
            GridAxis::Fixed(c) => Ok(vec![c.value()?]),
            GridAxis::Range { min, max, count } => {
                if *count == 0 {
                    return Err(Error::Config("grid count must be at least 1".into()));
                }
                let (lo, hi) = (min.value()?, max.value()?);
                if *count == 1 {
                    return Ok(vec![lo]);
                }
                let step = (hi - lo) / (*count - 1) as f64;
                Ok((0..*count).map(|k| lo + step * k as f64).collect())
            }
        }
    }

    /// `"2"`, `"pi/2"` or `"min:max:count"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        match parts.as_slice() {
            [v] => Ok(GridAxis::Fixed(Coord::Expr(v.to_string()))),
            [lo, hi, n] => Ok(GridAxis::Range {
                min: Coord::Expr(lo.to_string()),
                max: Coord::Expr(hi.to_string()),
                count: n
                    .parse()
                    .map_err(|_| Error::Config(format!("bad grid count `{n}`")))?,
            }),
            _ => Err(Error::Config(format!("bad grid axis `{s}` (use v or min:max:count)"))),
        }
    }
}

/// Grid axes keyed by chart coordinate name (or `x0..x3`).
pub type GridSpec = BTreeMap<String, GridAxis>;

/// Parse `"v;min:max:count;v;v"` into axes `x0..x3`.
pub fn parse_grid(s: &str) -> Result<GridSpec> {
    let axes: Vec<&str> = s.split(';').collect();
    if axes.len() != 4 {
        return Err(Error::Config(format!(
            "grid needs four `;`-separated axes, got {}",
            axes.len()
        )));
    }
    axes.iter()
        .enumerate()
        .map(|(k, a)| Ok((format!("x{k}"), GridAxis::parse(a)?)))
        .collect()
}

/// Parse `"t,r,th,ph"`; entries may be constant expressions.
pub fn parse_point(s: &str) -> Result<Vec4> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Config(format!("point `{s}` needs four comma-separated values")));
    }
    let mut p = [0.0; 4];
    for (k, v) in parts.iter().enumerate() {
        p[k] = eval_constant(v.trim())?;
    }
    Ok(p)
}

/// Everything a subcommand needs besides its output options.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub geometry: GeometryConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge: Option<GaugeConfig>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<[Coord; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub diff_mode: DiffMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    /// Random points drawn by `check` when no points are given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

pub const DEFAULT_SAMPLES: usize = 20;

impl RunConfig {
    pub fn new(geometry: GeometryConfig) -> Self {
        RunConfig {
            geometry,
            gauge: None,
            points: Vec::new(),
            grid: None,
            diff_mode: DiffMode::Dual,
            tol: None,
            seed: 0,
            samples: None,
        }
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(src)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(Error::Config(format!("tol must be positive, got {t}")));
            }
        }
        if self.samples == Some(0) {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        Ok(())
    }

    pub fn tolerance(&self) -> f64 {
        self.tol.unwrap_or_else(|| self.diff_mode.tolerance())
    }

    /// Explicit points followed by grid points (first axis outermost).
    pub fn resolve_points(&self, chart: &Chart) -> Result<Vec<Vec4>> {
        let mut out = Vec::new();
        for p in &self.points {
            let mut v = [0.0; 4];
            for k in 0..4 {
                v[k] = p[k].value()?;
            }
            out.push(v);
        }
        if let Some(grid) = &self.grid {
            let mut axes: Vec<Vec<f64>> = Vec::with_capacity(4);
            for k in 0..4 {
                let by_name = grid.get(&chart.names[k]);
                let by_index = grid.get(&format!("x{k}"));
                let axis = match (by_name, by_index) {
                    (Some(_), Some(_)) if chart.names[k] != format!("x{k}") => {
                        return Err(Error::Config(format!("grid axis {k} given twice")))
                    }
                    (Some(a), _) | (None, Some(a)) => a,
                    (None, None) => {
                        return Err(Error::Config(format!(
                            "grid is missing coordinate `{}`",
                            chart.names[k]
                        )))
                    }
                };
                axes.push(axis.values()?);
            }
            for key in grid.keys() {
                let known = (0..4).any(|k| *key == chart.names[k] || *key == format!("x{k}"));
                if !known {
                    return Err(Error::Config(format!("grid names unknown coordinate `{key}`")));
                }
            }
            for &a in &axes[0] {
                for &b in &axes[1] {
                    for &c in &axes[2] {
                        for &d in &axes[3] {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
