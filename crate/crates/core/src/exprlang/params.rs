use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const RESERVED: [&str; 6] = ["pi", "i", "x0", "x1", "x2", "x3"];

/// Named real constants such as the mass `M`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamSet(BTreeMap<String, f64>);

impl ParamSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Result<Self> {
        self.insert(name, value)?;
        Ok(self)
    }

    pub fn insert(&mut self, name: &str, value: f64) -> Result<()> {
        validate(name, value)?;
        self.0.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &f64)> {
        self.0.iter()
    }

    /// Reject names that collide with the chart or reserved words.
    pub fn validate(&self, chart: &[String; 4]) -> Result<()> {
        for (name, value) in &self.0 {
            validate(name, *value)?;
            if chart.contains(name) {
                return Err(Error::InvalidParameter {
                    name: name.clone(),
                    reason: "collides with a coordinate name".into(),
                });
            }
        }
        Ok(())
    }
}

fn validate(name: &str, value: f64) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::InvalidParameter {
            name: name.to_string(),
            reason: reason.to_string(),
        })
    };
    let mut chars = name.chars();
    let ok_start = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    if !ok_start || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return bad("not an identifier");
    }
    if RESERVED.contains(&name) || super::Func::from_name(name).is_some() {
        return bad("reserved name");
    }
    if !value.is_finite() {
        return bad("value is not finite");
    }
    Ok(())
}
