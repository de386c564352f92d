//! Ready-made tetrad fields.

use super::{Chart, TetradField};
use crate::error::{Error, Result};
use crate::exprlang::{parse_bound, ParamSet};
use std::f64::consts::PI;

pub const NAMES: [&str; 4] = [
    "minkowski_cartesian",
    "minkowski_spherical_diagonal",
    "schwarzschild_diagonal",
    "cartesian_in_spherical",
];

fn spherical_chart() -> Chart {
    Chart::new(["t", "r", "th", "ph"])
        .with_domain(1, 0.0, f64::INFINITY)
        .with_domain(2, 0.0, PI)
}

fn diag(name: &str, chart: Chart, params: ParamSet, h: [&str; 4]) -> Result<TetradField> {
    let mut out = Vec::with_capacity(4);
    for s in h {
        out.push(parse_bound(s, &chart.names, &params)?);
    }
    let h: [_; 4] = out.try_into().expect("four entries");
    Ok(TetradField::diagonal(name, chart, params, h))
}

fn full(name: &str, chart: Chart, params: ParamSet, e: [[&str; 4]; 4]) -> Result<TetradField> {
    let mut rows = Vec::with_capacity(4);
    for row in e {
        let mut r = Vec::with_capacity(4);
        for s in row {
            r.push(parse_bound(s, &chart.names, &params)?);
        }
        rows.push(<[_; 4]>::try_from(r).expect("four entries"));
    }
    let e: [[_; 4]; 4] = rows.try_into().expect("four rows");
    Ok(TetradField::full(name, chart, params, e))
}

/// A builtin geometry with its default parameters (`M = 1`).
pub fn geometry(name: &str) -> Result<TetradField> {
    geometry_with_params(name, &ParamSet::default())
}

/// A builtin geometry; entries of `overrides` replace default parameters.
pub fn geometry_with_params(name: &str, overrides: &ParamSet) -> Result<TetradField> {
    let mut params = ParamSet::default();
    if name == "schwarzschild_diagonal" {
        params.insert("M", 1.0)?;
    }
    for (k, v) in overrides.iter() {
        params.insert(k, *v)?;
    }
    match name {
        "minkowski_cartesian" => diag(
            name,
            Chart::new(["t", "x", "y", "z"]),
            params,
            ["1", "1", "1", "1"],
        ),
        "minkowski_spherical_diagonal" => diag(
            name,
            spherical_chart(),
            params,
            ["1", "1", "r", "r*sin(th)"],
        ),
        "schwarzschild_diagonal" => diag(
            name,
            spherical_chart(),
            params,
            [
                "sqrt(1 - 2*M/r)",
                "1/sqrt(1 - 2*M/r)",
                "r",
                "r*sin(th)",
            ],
        ),
        "cartesian_in_spherical" => full(
            name,
            spherical_chart(),
            params,
            [
                ["1", "0", "0", "0"],
                ["0", "sin(th)*cos(ph)", "cos(th)*cos(ph)/r", "-sin(ph)/(r*sin(th))"],
                ["0", "sin(th)*sin(ph)", "cos(th)*sin(ph)/r", "cos(ph)/(r*sin(th))"],
                ["0", "cos(th)", "-sin(th)/r", "0"],
            ],
        ),
        _ => Err(Error::Config(format!(
            "unknown builtin geometry `{name}` (known: {})",
            NAMES.join(", ")
        ))),
    }
}
