use std::io::Write;

use rayon::prelude::*;

use crate::coop::{lambda_transfer_with, ntu_nash, tu_solution, LambdaOptions};
use crate::error::{Error, Result};
use crate::geom::PayoffPoint;
use crate::models::{closed_form, normalized_game, CaseTag, NormalizedParams};

use super::num::fmt_num;

pub const SWEEP_HEADER: [&str; 8] = [
    "alpha",
    "beta",
    "case_tag",
    "solution_u",
    "solution_v",
    "disagreement_u",
    "lambda_star",
    "max_deviation",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub beta: f64,
    pub case_tag: CaseTag,
    pub solution: PayoffPoint,
    pub disagreement_u: f64,
    pub lambda_star: f64,
    /// Largest absolute gap between the numeric pipeline and the closed form.
    pub max_deviation: f64,
}

fn check_range(label: &str, (lo, hi): (f64, f64)) -> Result<()> {
    if !(lo > 1.0 && hi < 2.0 && lo <= hi) {
        return Err(Error::Constraint(format!(
            "{label} range must satisfy 1 < lo <= hi < 2, got {lo}:{hi}"
        )));
    }
    Ok(())
}

fn axis((lo, hi): (f64, f64), steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
        .collect()
}

fn gap(p: &PayoffPoint, q: &PayoffPoint) -> f64 {
    (p.u - q.u).abs().max((p.v - q.v).abs())
}

/// Runs the full numeric pipeline at one parameter point and compares it with
/// the closed form.
pub fn sweep_point(params: &NormalizedParams) -> Result<SweepRow> {
    let g = normalized_game(params)?;
    let expect = closed_form(params)?;
    let tu = tu_solution(&g)?;
    let ntu = ntu_nash(&g, None)?;
    let lam = lambda_transfer_with(&g, LambdaOptions::default())?;
    let deviation = [
        gap(&tu.phi, &expect.tu_phi),
        gap(&ntu.point, &expect.ntu_point),
        gap(&lam.point, &expect.lambda_point),
        gap(&tu.disagreement, &expect.disagreement),
        (tu.sigma - expect.sigma).abs(),
        (tu.delta - expect.delta).abs(),
        (lam.lambda_star - expect.lambda_star).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(SweepRow {
        alpha: params.alpha,
        beta: params.beta,
        case_tag: expect.case_tag,
        solution: ntu.point,
        disagreement_u: tu.disagreement.u,
        lambda_star: lam.lambda_star,
        max_deviation: deviation,
    })
}

/// Grid of `steps x steps` points, alpha-major.
pub fn sweep(alpha: (f64, f64), beta: (f64, f64), steps: usize) -> Result<Vec<SweepRow>> {
    check_range("alpha", alpha)?;
    check_range("beta", beta)?;
    if steps == 0 {
        return Err(Error::Constraint("steps must be at least 1".into()));
    }
    let grid: Vec<(f64, f64)> = axis(alpha, steps)
        .into_iter()
        .flat_map(|a| axis(beta, steps).into_iter().map(move |b| (a, b)))
        .collect();
    grid.par_iter()
        .map(|&(a, b)| sweep_point(&NormalizedParams::new(a, b)?))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            fmt_num(r.alpha),
            fmt_num(r.beta),
            r.case_tag.as_str().to_owned(),
            fmt_num(r.solution.u),
            fmt_num(r.solution.v),
            fmt_num(r.disagreement_u),
            fmt_num(r.lambda_star),
            fmt_num(r.max_deviation),
        ])?;
    }
    w.flush()
}
