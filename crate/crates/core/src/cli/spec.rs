use serde::{Deserialize, Serialize};

use crate::coop::Bimatrix;
use crate::error::{Error, Result};
use crate::geom::PayoffPoint;
use crate::matgame::Matrix;
use crate::models::STRATEGY_LABELS;

use super::num::round_json;

/// Serialized description of a bimatrix game.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSpec {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threat: Option<(f64, f64)>,
}

fn check_shape(label: &str, m: &[Vec<f64>], rows: usize, cols: usize) -> Result<()> {
    if m.len() != rows {
        return Err(Error::InvalidInput(format!(
            "{label} has {} rows but rows = {rows}",
            m.len()
        )));
    }
    if let Some((i, r)) = m.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::InvalidInput(format!(
            "{label} row {i} has {} entries but cols = {cols}",
            r.len()
        )));
    }
    Ok(())
}

impl GameSpec {
    pub fn from_bimatrix(name: &str, g: &Bimatrix) -> Self {
        Self {
            name: name.to_owned(),
            rows: g.rows(),
            cols: g.cols(),
            a: g.a().to_rows(),
            b: g.b().to_rows(),
            row_labels: None,
            col_labels: None,
            threat: None,
        }
    }

    /// Attaches the Preempt / Status Quo / Deter labels of the policy games.
    pub fn with_policy_labels(mut self) -> Self {
        let labels: Vec<String> = STRATEGY_LABELS.iter().map(|s| s.to_string()).collect();
        self.row_labels = Some(labels.clone());
        self.col_labels = Some(labels);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidInput("rows and cols must be positive".into()));
        }
        check_shape("A", &self.a, self.rows, self.cols)?;
        check_shape("B", &self.b, self.rows, self.cols)?;
        for (label, want, got) in [
            ("row_labels", self.rows, &self.row_labels),
            ("col_labels", self.cols, &self.col_labels),
        ] {
            if let Some(l) = got {
                if l.len() != want {
                    return Err(Error::InvalidInput(format!(
                        "{label} has {} entries, expected {want}",
                        l.len()
                    )));
                }
            }
        }
        if let Some((u, v)) = self.threat {
            if !u.is_finite() || !v.is_finite() {
                return Err(Error::InvalidInput("threat must be finite".into()));
            }
        }
        Ok(())
    }

    pub fn bimatrix(&self) -> Result<Bimatrix> {
        self.validate()?;
        Bimatrix::new(Matrix::from_rows(&self.a)?, Matrix::from_rows(&self.b)?)
    }

    pub fn threat_point(&self) -> Option<PayoffPoint> {
        self.threat.map(PayoffPoint::from)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("game file: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Pretty JSON with numbers rounded to twelve significant digits.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("game spec serializes");
        round_json(&mut value);
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }
}
