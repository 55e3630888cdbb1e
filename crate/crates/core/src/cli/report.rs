use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::coop::{
    lambda_transfer_with, ntu_nash, pure_nash, tu_solution, LambdaOptions, LambdaSolution,
    NtuSolution, PureEquilibrium, TuSolution,
};
use crate::error::{Error, Result};
use crate::geom::PayoffPoint;

use super::num::round_json;
use super::spec::GameSpec;

pub const TOOL: &str = "coopgame";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Nash,
    Tu,
    NtuNash,
    NtuLambda,
    All,
}

impl Method {
    fn includes(self, other: Method) -> bool {
        self == Method::All || self == other
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Threat point override; falls back to the game file's threat, then the TU
    /// disagreement point.
    pub threat: Option<PayoffPoint>,
    pub lambda_bracket: (f64, f64),
    pub tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        let d = LambdaOptions::default();
        Self {
            threat: None,
            lambda_bracket: d.bracket,
            tol: d.tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveReport {
    pub tool: String,
    pub version: String,
    pub method: Method,
    pub game: GameSpec,
    pub options: SolveOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nash: Option<Vec<PureEquilibrium>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tu: Option<TuSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ntu_nash: Option<NtuSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ntu_lambda: Option<LambdaSolution>,
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_json(&mut value);
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("report: {e}")))
    }
}

/// Runs the requested method(s) on `game`.
pub fn solve_report(game: &GameSpec, method: Method, options: SolveOptions) -> Result<SolveReport> {
    let g = game.bimatrix()?;
    let threat = options.threat.or_else(|| game.threat_point());
    let lambda_opts = LambdaOptions {
        bracket: options.lambda_bracket,
        tol: options.tol,
        ..LambdaOptions::default()
    };
    Ok(SolveReport {
        tool: TOOL.to_owned(),
        version: env!("CARGO_PKG_VERSION").to_owned(),
        method,
        game: game.clone(),
        nash: method.includes(Method::Nash).then(|| pure_nash(&g)),
        tu: method
            .includes(Method::Tu)
            .then(|| tu_solution(&g))
            .transpose()?,
        ntu_nash: method
            .includes(Method::NtuNash)
            .then(|| ntu_nash(&g, threat))
            .transpose()?,
        ntu_lambda: method
            .includes(Method::NtuLambda)
            .then(|| lambda_transfer_with(&g, lambda_opts))
            .transpose()?,
        options,
    })
}
