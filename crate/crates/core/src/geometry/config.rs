use super::{builtin, Chart, TetradField};
use crate::error::{Error, Result};
use crate::exprlang::{parse_bound, Expr, ParamSet};
use serde::{Deserialize, Serialize};

/// Tetrad entries as expression strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum TetradSpec {
    Diagonal { h: [String; 4] },
    Full { e: [[String; 4]; 4] },
}

/// JSON geometry description: either a builtin name or a chart plus tetrad.
///
/// ```
/// use tetrad::geometry::GeometryConfig;
///
/// let cfg: GeometryConfig = serde_json::from_str(r#"{
///     "chart": ["t", "r", "th", "ph"],
///     "tetrad": {"kind": "diagonal", "h": ["1", "1", "r", "r*sin(th)"]}
/// }"#).unwrap();
/// assert!(cfg.build().unwrap().is_diagonal());
/// ```
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<[String; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tetrad: Option<TetradSpec>,
    #[serde(default)]
    pub params: ParamSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub em_potential: Option<[String; 4]>,
}

fn exprs<const N: usize>(src: &[String; N], chart: &Chart, params: &ParamSet) -> Result<[Expr; N]> {
    let mut out = Vec::with_capacity(N);
    for s in src {
        out.push(parse_bound(s, &chart.names, params)?);
    }
    Ok(out.try_into().expect("length preserved"))
}

impl GeometryConfig {
    pub fn builtin(name: &str) -> Self {
        GeometryConfig {
            builtin: Some(name.to_string()),
            ..Default::default()
        }
    }

    pub fn build(&self) -> Result<TetradField> {
        let mut field = match (&self.builtin, &self.chart, &self.tetrad) {
            (Some(b), None, None) => builtin::geometry_with_params(b, &self.params)?,
            (None, Some(names), Some(spec)) => {
                let chart = Chart::new([&names[0], &names[1], &names[2], &names[3]].map(|s| s.as_str()));
                let mut seen = names.to_vec();
                seen.sort();
                seen.dedup();
                if seen.len() != 4 {
                    return Err(Error::Config("chart names must be distinct".into()));
                }
                self.params.validate(&chart.names)?;
                let name = self.name.clone().unwrap_or_else(|| "custom".into());
                match spec {
                    TetradSpec::Diagonal { h } => {
                        let h = exprs(h, &chart, &self.params)?;
                        TetradField::diagonal(&name, chart, self.params.clone(), h)
                    }
                    TetradSpec::Full { e } => {
                        let mut rows = Vec::with_capacity(4);
                        for row in e {
                            rows.push(exprs(row, &chart, &self.params)?);
                        }
                        let e: [[Expr; 4]; 4] = rows.try_into().expect("four rows");
                        TetradField::full(&name, chart, self.params.clone(), e)
                    }
                }
            }
            _ => {
                return Err(Error::Config(
                    "geometry needs either `builtin` or both `chart` and `tetrad`".into(),
                ))
            }
        };
        if let Some(a) = &self.em_potential {
            field.em_potential = Some(exprs(a, &field.chart, &field.params)?);
        }
        Ok(field)
    }
}
