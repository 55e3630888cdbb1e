//! Counter-terrorism policy games and their closed-form solutions.
//!
//! Strategies are ordered Preempt, Status Quo, Deter for both players. In the
//! general game `B` is the public benefit and `c` the private cost of
//! preemption; `b` is the private benefit and `C` the public cost of deterrence.

use serde::{Deserialize, Serialize};

use crate::coop::Bimatrix;
use crate::error::{Error, Result};
use crate::geom::{PayoffPoint, Segment};
use crate::matgame::Matrix;

pub const STRATEGY_LABELS: [&str; 3] = ["Preempt", "Status Quo", "Deter"];

const STRICT_TOL: f64 = 1e-12;

fn strictly_less(lhs: f64, rhs: f64, rule: &str) -> Result<()> {
    if lhs.is_finite() && rhs.is_finite() && lhs < rhs - STRICT_TOL {
        Ok(())
    } else {
        Err(Error::Constraint(format!(
            "{rule} violated ({lhs} vs {rhs})"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralParams {
    #[serde(rename = "B")]
    pub public_benefit: f64,
    #[serde(rename = "c")]
    pub preempt_cost: f64,
    #[serde(rename = "b")]
    pub deter_benefit: f64,
    #[serde(rename = "C")]
    pub public_cost: f64,
}

impl GeneralParams {
    /// Validates `B < c < 2B` and `C < b < 2C` (which also force `B, C > 0`).
    pub fn new(big_b: f64, c: f64, b: f64, big_c: f64) -> Result<Self> {
        let p = Self {
            public_benefit: big_b,
            preempt_cost: c,
            deter_benefit: b,
            public_cost: big_c,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let (big_b, c, b, big_c) = (
            self.public_benefit,
            self.preempt_cost,
            self.deter_benefit,
            self.public_cost,
        );
        strictly_less(0.0, big_b, "B > 0")?;
        strictly_less(0.0, big_c, "C > 0")?;
        strictly_less(big_b, c, "B < c")?;
        strictly_less(c, 2.0 * big_b, "c < 2B")?;
        strictly_less(big_c, b, "C < b")?;
        strictly_less(b, 2.0 * big_c, "b < 2C")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedParams {
    pub alpha: f64,
    pub beta: f64,
}

impl NormalizedParams {
    /// Validates `1 < alpha < 2` and `1 < beta < 2`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = Self { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        strictly_less(1.0, self.alpha, "alpha > 1")?;
        strictly_less(self.alpha, 2.0, "alpha < 2")?;
        strictly_less(1.0, self.beta, "beta > 1")?;
        strictly_less(self.beta, 2.0, "beta < 2")
    }

    pub fn case(&self) -> CaseTag {
        let d = self.alpha - self.beta;
        if d.abs() <= STRICT_TOL {
            CaseTag::Equal
        } else if d < 0.0 {
            CaseTag::AlphaLess
        } else {
            CaseTag::AlphaGreater
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    AlphaLess,
    AlphaGreater,
    Equal,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::AlphaLess => "alpha_less",
            CaseTag::AlphaGreater => "alpha_greater",
            CaseTag::Equal => "equal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormPrediction {
    pub tu_phi: PayoffPoint,
    pub ntu_point: PayoffPoint,
    pub lambda_point: PayoffPoint,
    pub disagreement: PayoffPoint,
    pub sigma: f64,
    pub delta: f64,
    pub lambda_star: f64,
    pub case_tag: CaseTag,
}

/// A Pareto frontier piece together with its line `v = slope * u + intercept`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontierPiece {
    pub label: String,
    pub segment: Segment,
    pub slope: f64,
    pub intercept: f64,
}

fn pairs_to_bimatrix(cells: [[(f64, f64); 3]; 3]) -> Bimatrix {
    let a: Vec<f64> = cells.iter().flatten().map(|c| c.0).collect();
    let b: Vec<f64> = cells.iter().flatten().map(|c| c.1).collect();
    Bimatrix::new(
        Matrix::new(3, 3, a).expect("finite 3x3 payoffs"),
        Matrix::new(3, 3, b).expect("finite 3x3 payoffs"),
    )
    .expect("same shape")
}

/// The game with public benefit 4, private preemption cost 6, private
/// deterrence benefit 6 and public deterrence cost 4.
pub fn basic_game() -> Bimatrix {
    pairs_to_bimatrix([
        [(2.0, 2.0), (-2.0, 4.0), (-6.0, 6.0)],
        [(4.0, -2.0), (0.0, 0.0), (-4.0, 2.0)],
        [(6.0, -6.0), (2.0, -4.0), (-2.0, -2.0)],
    ])
}

pub fn general_game(p: &GeneralParams) -> Result<Bimatrix> {
    p.validate()?;
    let (bb, c, b, cc) = (
        p.public_benefit,
        p.preempt_cost,
        p.deter_benefit,
        p.public_cost,
    );
    Ok(pairs_to_bimatrix([
        [
            (2.0 * bb - c, 2.0 * bb - c),
            (bb - c, bb),
            (bb - c - cc, bb + b - cc),
        ],
        [(bb, bb - c), (0.0, 0.0), (-cc, b - cc)],
        [
            (bb + b - cc, bb - c - cc),
            (b - cc, -cc),
            (b - 2.0 * cc, b - 2.0 * cc),
        ],
    ]))
}

/// The game with `B = C = 1`, `c = alpha` and `b = beta`. Its cells are
/// `(2-a, 2-a)`, `(-(a-1), 1)`, `(-a, b)` in the Preempt row, and so on.
pub fn normalized_game(p: &NormalizedParams) -> Result<Bimatrix> {
    p.validate()?;
    general_game(&GeneralParams {
        public_benefit: 1.0,
        preempt_cost: p.alpha,
        deter_benefit: p.beta,
        public_cost: 1.0,
    })
}

/// All three cooperative methods select (Preempt, Preempt), so every solution
/// is `(2 - alpha, 2 - alpha)`; the threat point is (Deter, Deter).
pub fn closed_form(p: &NormalizedParams) -> Result<ClosedFormPrediction> {
    p.validate()?;
    let share = 2.0 - p.alpha;
    let point = PayoffPoint::new(share, share);
    let threat = -(2.0 - p.beta);
    Ok(ClosedFormPrediction {
        tu_phi: point,
        ntu_point: point,
        lambda_point: point,
        disagreement: PayoffPoint::new(threat, threat),
        sigma: 2.0 * share,
        delta: 0.0,
        lambda_star: 1.0,
        case_tag: p.case(),
    })
}

fn piece(
    label: &str,
    from: (f64, f64),
    to: (f64, f64),
    slope: f64,
    intercept: f64,
) -> FrontierPiece {
    FrontierPiece {
        label: label.to_owned(),
        segment: Segment::new(from.into(), to.into()),
        slope,
        intercept,
    }
}

/// Frontier pieces ordered from the top-left vertex `(-alpha, beta)`.
///
/// For `alpha <= beta` the frontier is `P1, P2` through `(2 - alpha, 2 - alpha)`.
/// For `alpha > beta` it bends at `(-(alpha - 1), 1)` and `(1, -(alpha - 1))`
/// as well, giving four pieces.
pub fn frontier_segments(p: &NormalizedParams) -> Result<Vec<FrontierPiece>> {
    p.validate()?;
    let (a, b) = (p.alpha, p.beta);
    let top = (-a, b);
    let coop = (2.0 - a, 2.0 - a);
    let bottom = (b, -a);
    if p.case() != CaseTag::AlphaGreater {
        let s = a + b - 2.0;
        return Ok(vec![
            piece("P1", top, coop, -s / 2.0, (2.0 - a) * (a + b) / 2.0),
            piece("P2", coop, bottom, -2.0 / s, (2.0 - a) * (a + b) / s),
        ]);
    }
    let left_kink = (-(a - 1.0), 1.0);
    let right_kink = (1.0, -(a - 1.0));
    let outer = a + b - a * b;
    Ok(vec![
        piece("Q1*", top, left_kink, -(b - 1.0), outer),
        piece("Q1", left_kink, coop, -(a - 1.0), a * (2.0 - a)),
        piece(
            "Q2",
            coop,
            right_kink,
            -1.0 / (a - 1.0),
            a * (2.0 - a) / (a - 1.0),
        ),
        piece(
            "Q2*",
            right_kink,
            bottom,
            -1.0 / (b - 1.0),
            outer / (b - 1.0),
        ),
    ])
}
