//! Non-cooperative and cooperative solutions of a bimatrix game.
//!
//! * [`pure_nash`]: pure-strategy equilibria of the non-cooperative game.
//! * [`tu_solution`]: transferable utility split of the maximal joint payoff,
//!   with threat strategies from the zero-sum game `A - B`.
//! * [`ntu_nash`]: Nash bargaining over the convex hull of the pure outcomes.
//! * [`lambda_transfer`]: rescale player 1's utility by `lambda` until the TU
//!   split of `(lambda A, B)` lands on the NTU Pareto frontier.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{feasible_set, FeasibleSet, PayoffPoint, Segment};
use crate::matgame::{self, Matrix, MixedStrategy};

/// Tolerance for TU split identities and threat membership.
pub const COOP_TOL: f64 = 1e-9;
const EQ_TOL: f64 = 1e-12;

/// Payoff matrices of a finite two-player game.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bimatrix {
    a: Matrix,
    b: Matrix,
}

impl Bimatrix {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if a.shape() != b.shape() {
            return Err(Error::InvalidInput(format!(
                "payoff matrices differ in shape: A is {:?}, B is {:?}",
                a.shape(),
                b.shape()
            )));
        }
        Ok(Self { a, b })
    }

    pub fn from_rows<R: AsRef<[f64]>>(a: &[R], b: &[R]) -> Result<Self> {
        Self::new(Matrix::from_rows(a)?, Matrix::from_rows(b)?)
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn payoff(&self, i: usize, j: usize) -> PayoffPoint {
        PayoffPoint::new(self.a.get(i, j), self.b.get(i, j))
    }

    /// Pure outcomes in row-major order.
    pub fn outcomes(&self) -> Vec<PayoffPoint> {
        (0..self.rows())
            .flat_map(|i| (0..self.cols()).map(move |j| (i, j)))
            .map(|(i, j)| self.payoff(i, j))
            .collect()
    }

    pub fn feasible_set(&self) -> FeasibleSet {
        feasible_set(&self.outcomes()).expect("matrices are validated non-empty and finite")
    }

    /// Multiplies player 1's payoffs by `lambda`.
    pub fn rescaled_row(&self, lambda: f64) -> Self {
        Self {
            a: self.a.map(|x| lambda * x),
            b: self.b.clone(),
        }
    }
}

/// Cell of a pure-strategy Nash equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PureEquilibrium {
    pub row: usize,
    pub col: usize,
    pub payoff: PayoffPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuSolution {
    pub sigma: f64,
    pub delta: f64,
    pub row_threat: MixedStrategy,
    pub col_threat: MixedStrategy,
    pub disagreement: PayoffPoint,
    pub phi: PayoffPoint,
    pub coop_cell: (usize, usize),
    /// Transfer from player 1 to player 2 after playing `coop_cell`.
    pub side_payment: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NtuSolution {
    pub point: PayoffPoint,
    pub threat: PayoffPoint,
    pub nash_product: f64,
    /// Set when no feasible point strictly dominates the threat; `point` then
    /// maximizes `min(u - u*, v - v*)` instead of the product.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaSolution {
    pub lambda_star: f64,
    pub point: PayoffPoint,
    pub sigma_of_lambda: f64,
    pub delta_of_lambda: f64,
    pub iterations: usize,
}

/// Search controls for [`lambda_transfer`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaOptions {
    pub bracket: (f64, f64),
    pub tol: f64,
    pub probes: usize,
    pub max_steps: usize,
}

impl Default for LambdaOptions {
    fn default() -> Self {
        Self {
            bracket: (1e-6, 1e6),
            tol: 1e-9,
            probes: 64,
            max_steps: 200,
        }
    }
}

/// All pure equilibria, lexicographically ordered by cell.
pub fn pure_nash(g: &Bimatrix) -> Vec<PureEquilibrium> {
    let (a, b) = (g.a(), g.b());
    let col_best: Vec<f64> = (0..g.cols())
        .map(|j| {
            (0..g.rows())
                .map(|i| a.get(i, j))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let row_best: Vec<f64> = (0..g.rows())
        .map(|i| b.row(i).iter().copied().fold(f64::NEG_INFINITY, f64::max))
        .collect();
    let mut out = Vec::new();
    for (i, &row_max) in row_best.iter().enumerate() {
        for (j, &col_max) in col_best.iter().enumerate() {
            if a.get(i, j) >= col_max - EQ_TOL && b.get(i, j) >= row_max - EQ_TOL {
                out.push(PureEquilibrium {
                    row: i,
                    col: j,
                    payoff: g.payoff(i, j),
                });
            }
        }
    }
    out
}

/// Largest cell of `scale * A + B` and the first cell attaining it.
fn max_weighted_cell(g: &Bimatrix, scale: f64) -> (f64, (usize, usize)) {
    let mut best = (f64::NEG_INFINITY, (0, 0));
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let s = scale * g.a().get(i, j) + g.b().get(i, j);
            if s > best.0 {
                best = (s, (i, j));
            }
        }
    }
    best
}

pub fn tu_solution(g: &Bimatrix) -> Result<TuSolution> {
    let (sigma, coop_cell) = max_weighted_cell(g, 1.0);
    let diff = (g.a() - g.b())?;
    let threat = matgame::solve(&diff)?;
    let p = threat.row_strategy.probs();
    let q = threat.col_strategy.probs();
    let disagreement = PayoffPoint::new(g.a().bilinear(p, q), g.b().bilinear(p, q));
    let delta = threat.value;
    let phi = PayoffPoint::new((sigma + delta) / 2.0, (sigma - delta) / 2.0);
    Ok(TuSolution {
        sigma,
        delta,
        side_payment: g.a().get(coop_cell.0, coop_cell.1) - phi.u,
        row_threat: threat.row_strategy,
        col_threat: threat.col_strategy,
        disagreement,
        phi,
        coop_cell,
    })
}

/// Nash bargaining solution of `g`. The threat point defaults to the TU
/// disagreement point.
pub fn ntu_nash(g: &Bimatrix, threat: Option<PayoffPoint>) -> Result<NtuSolution> {
    let threat = match threat {
        Some(t) => t,
        None => tu_solution(g)?.disagreement,
    };
    nash_bargaining(&g.feasible_set(), threat)
}

/// Maximizes `(u - u*)(v - v*)` over the frontier of `set`.
pub fn nash_bargaining(set: &FeasibleSet, threat: PayoffPoint) -> Result<NtuSolution> {
    if !threat.is_finite() {
        return Err(Error::InvalidInput(format!(
            "threat point {threat:?} is not finite"
        )));
    }
    if !set.contains(&threat, COOP_TOL) {
        return Err(Error::Domain(format!(
            "threat point ({}, {}) lies outside the feasible set",
            threat.u, threat.v
        )));
    }

    let product = |p: &PayoffPoint| (p.u - threat.u) * (p.v - threat.v);
    let gain = |p: &PayoffPoint| (p.u - threat.u).min(p.v - threat.v);

    let (best_gain, fallback) = set
        .frontier
        .iter()
        .map(|s| max_min_gain_on(s, &threat))
        .map(|p| (gain(&p), p))
        .reduce(prefer_gain)
        .expect("frontier is never empty");

    if best_gain <= EQ_TOL {
        return Ok(NtuSolution {
            point: fallback,
            threat,
            nash_product: product(&fallback),
            degenerate: true,
        });
    }

    let point = set
        .frontier
        .iter()
        .map(|s| max_product_on(s, &threat))
        .max_by(|p, q| product(p).total_cmp(&product(q)))
        .expect("frontier is never empty");
    Ok(NtuSolution {
        point,
        threat,
        nash_product: product(&point),
        degenerate: false,
    })
}

fn prefer_gain(x: (f64, PayoffPoint), y: (f64, PayoffPoint)) -> (f64, PayoffPoint) {
    let tie = (x.0 - y.0).abs() <= EQ_TOL;
    if (tie && y.1.u + y.1.v > x.1.u + x.1.v) || (!tie && y.0 > x.0) {
        y
    } else {
        x
    }
}

/// Maximizer of the Nash product on one frontier segment: the vertex of the
/// quadratic obtained by substituting the segment's line, clamped to it.
fn max_product_on(seg: &Segment, threat: &PayoffPoint) -> PayoffPoint {
    let product = |p: &PayoffPoint| (p.u - threat.u) * (p.v - threat.v);
    let Some(slope) = seg.slope() else {
        return if product(&seg.a) >= product(&seg.b) {
            seg.a
        } else {
            seg.b
        };
    };
    // v(u) - v* = slope * u + offset;  f(u) = (u - u*)(slope * u + offset).
    let offset = seg.a.v - slope * seg.a.u - threat.v;
    let on_line = |u: f64| PayoffPoint::new(u, seg.a.v + slope * (u - seg.a.u));
    let mut candidates = vec![seg.a, seg.b];
    if slope < 0.0 {
        let vertex = (slope * threat.u - offset) / (2.0 * slope);
        candidates.push(on_line(vertex.clamp(seg.a.u, seg.b.u)));
    }
    candidates
        .into_iter()
        .max_by(|p, q| product(p).total_cmp(&product(q)))
        .expect("candidates are non-empty")
}

/// Maximizer of `min(u - u*, v - v*)` on one frontier segment.
fn max_min_gain_on(seg: &Segment, threat: &PayoffPoint) -> PayoffPoint {
    let gain = |p: &PayoffPoint| (p.u - threat.u).min(p.v - threat.v);
    let mut candidates = vec![(gain(&seg.a), seg.a), (gain(&seg.b), seg.b)];
    if let Some(slope) = seg.slope() {
        // u - u* = v(u) - v*  with v(u) = a.v + slope (u - a.u).
        if slope != 1.0 {
            let u = (seg.a.v - slope * seg.a.u - threat.v + threat.u) / (1.0 - slope);
            let u = u.clamp(seg.a.u, seg.b.u);
            let p = PayoffPoint::new(u, seg.a.v + slope * (u - seg.a.u));
            candidates.push((gain(&p), p));
        }
    }
    candidates
        .into_iter()
        .reduce(prefer_gain)
        .expect("candidates are non-empty")
        .1
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "lambda must be positive and finite, got {lambda}"
        )))
    }
}

/// `max_{i,j} (lambda a_ij + b_ij)`.
pub fn sigma_of_lambda(g: &Bimatrix, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(max_weighted_cell(g, lambda).0)
}

/// Value of the zero-sum game `lambda A - B`.
pub fn delta_of_lambda(g: &Bimatrix, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let diff = g.a().combine(lambda, g.b(), -1.0)?;
    Ok(matgame::solve(&diff)?.value)
}

/// TU split of the rescaled game, read back in player 1's original units.
fn phi_of_lambda(g: &Bimatrix, lambda: f64) -> Result<(f64, f64, PayoffPoint)> {
    let sigma = sigma_of_lambda(g, lambda)?;
    let delta = delta_of_lambda(g, lambda)?;
    let phi = PayoffPoint::new((sigma + delta) / (2.0 * lambda), (sigma - delta) / 2.0);
    Ok((sigma, delta, phi))
}

struct Probe {
    lambda: f64,
    offset: f64,
    sigma: f64,
    delta: f64,
    face: Segment,
}

fn probe(g: &Bimatrix, set: &FeasibleSet, lambda: f64) -> Result<Probe> {
    let (sigma, delta, phi) = phi_of_lambda(g, lambda)?;
    let face = set.support(lambda)?.face;
    Ok(Probe {
        lambda,
        offset: phi.u - phi.u.clamp(face.a.u, face.b.u),
        sigma,
        delta,
        face,
    })
}

/// Solution at a probe with zero (or smallest) offset. A supporting face that
/// is a whole edge only occurs at that edge's slope, so the root is evaluated
/// there and `phi_1` is placed on the edge.
fn finish(g: &Bimatrix, p: Probe, iterations: usize) -> Result<LambdaSolution> {
    if let Some(solution) = on_edge(g, &p.face, iterations)? {
        return Ok(solution);
    }
    Ok(LambdaSolution {
        lambda_star: p.lambda,
        point: p.face.a,
        sigma_of_lambda: p.sigma,
        delta_of_lambda: p.delta,
        iterations,
    })
}

fn on_edge(g: &Bimatrix, edge: &Segment, iterations: usize) -> Result<Option<LambdaSolution>> {
    if edge.is_degenerate() {
        return Ok(None);
    }
    let Some(slope) = edge.slope().filter(|s| *s < 0.0) else {
        return Ok(None);
    };
    let lambda = -slope;
    let (sigma, delta, phi) = phi_of_lambda(g, lambda)?;
    let u = phi.u.clamp(edge.a.u, edge.b.u);
    Ok(Some(LambdaSolution {
        lambda_star: lambda,
        point: PayoffPoint::new(u, edge.a.v + slope * (u - edge.a.u)),
        sigma_of_lambda: sigma,
        delta_of_lambda: delta,
        iterations,
    }))
}

/// Lambda-transfer solution with the default search controls and the given
/// bracket and tolerance.
pub fn lambda_transfer(g: &Bimatrix, bracket: (f64, f64), tol: f64) -> Result<LambdaSolution> {
    lambda_transfer_with(
        g,
        LambdaOptions {
            bracket,
            tol,
            ..LambdaOptions::default()
        },
    )
}

/// Finds the smallest `lambda` in the bracket where the rescaled TU split
/// `phi(lambda)` lies on the Pareto frontier.
///
/// `phi(lambda)` always lies on the support line `lambda u + v = sigma(lambda)`,
/// so it is on the frontier exactly when `phi_1` falls inside the `u`-range of
/// the supporting face. The signed excess `phi_1 - clamp(phi_1, face)` is
/// bracketed on log-spaced probes and then bisected.
pub fn lambda_transfer_with(g: &Bimatrix, opts: LambdaOptions) -> Result<LambdaSolution> {
    let (lo, hi) = opts.bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain(format!(
            "lambda bracket must satisfy 0 < lo < hi, got ({lo}, {hi})"
        )));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    if opts.probes < 2 {
        return Err(Error::Domain(
            "at least two bracketing probes are required".into(),
        ));
    }

    let set = g.feasible_set();
    let (log_lo, log_hi) = (lo.ln(), hi.ln());
    let mut previous: Option<Probe> = None;
    let mut seen = Vec::with_capacity(opts.probes);
    for k in 0..opts.probes {
        let lambda = match k {
            0 => lo,
            k if k == opts.probes - 1 => hi,
            k => (log_lo + (log_hi - log_lo) * k as f64 / (opts.probes - 1) as f64).exp(),
        };
        let current = probe(g, &set, lambda)?;
        seen.push((current.lambda, current.offset));
        if current.offset == 0.0 {
            return finish(g, current, k + 1);
        }
        if let Some(prev) = previous.take() {
            if prev.offset.signum() != current.offset.signum() {
                return bisect(g, &set, prev, current, opts, k + 1);
            }
        }
        previous = Some(current);
    }
    Err(Error::NoConvergence {
        reason: format!(
            "phi(lambda) never crosses the Pareto frontier on [{lo}, {hi}] ({} probes)",
            opts.probes
        ),
        probes: seen,
    })
}

fn bisect(
    g: &Bimatrix,
    set: &FeasibleSet,
    mut left: Probe,
    mut right: Probe,
    opts: LambdaOptions,
    probes_used: usize,
) -> Result<LambdaSolution> {
    let mut steps = 0;
    while right.lambda - left.lambda > opts.tol {
        if steps == opts.max_steps {
            return Err(Error::NoConvergence {
                reason: format!(
                    "bisection stopped after {steps} steps on [{}, {}]",
                    left.lambda, right.lambda
                ),
                probes: vec![(left.lambda, left.offset), (right.lambda, right.offset)],
            });
        }
        steps += 1;
        let mid = 0.5 * (left.lambda + right.lambda);
        if mid <= left.lambda || mid >= right.lambda {
            break;
        }
        let m = probe(g, set, mid)?;
        if m.offset == 0.0 {
            return finish(g, m, probes_used + steps);
        }
        if m.offset.signum() == left.offset.signum() {
            left = m;
        } else {
            right = m;
        }
    }
    let iterations = probes_used + steps;
    // Both ends resting on the two vertices of one edge: the face jumps across
    // that edge's slope and the root is the slope itself.
    if left.face.is_degenerate() && right.face.is_degenerate() && left.face.a != right.face.a {
        let edge = Segment::new(left.face.a, right.face.a);
        let within = |l: f64| l >= left.lambda - opts.tol && l <= right.lambda + opts.tol;
        if edge.slope().is_some_and(|s| within(-s)) {
            if let Some(solution) = on_edge(g, &edge, iterations)? {
                return Ok(solution);
            }
        }
    }
    let best = if left.offset.abs() <= right.offset.abs() {
        left
    } else {
        right
    };
    finish(g, best, iterations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basic() -> Bimatrix {
        Bimatrix::from_rows(
            &[[2.0, -2.0, -6.0], [4.0, 0.0, -4.0], [6.0, 2.0, -2.0]],
            &[[2.0, 4.0, 6.0], [-2.0, 0.0, 2.0], [-6.0, -4.0, -2.0]],
        )
        .unwrap()
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let err = Bimatrix::from_rows(&[vec![1.0, 2.0]], &[vec![1.0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn pure_nash_basic() {
        let eq = pure_nash(&basic());
        assert_eq!(
            eq,
            vec![PureEquilibrium {
                row: 2,
                col: 2,
                payoff: PayoffPoint::new(-2.0, -2.0)
            }]
        );
    }

    #[test]
    fn pure_nash_zero_game_has_all_cells() {
        let z = Bimatrix::from_rows(&[[0.0, 0.0], [0.0, 0.0]], &[[0.0, 0.0], [0.0, 0.0]]).unwrap();
        let cells: Vec<_> = pure_nash(&z).iter().map(|e| (e.row, e.col)).collect();
        assert_eq!(cells, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn tu_basic() {
        let tu = tu_solution(&basic()).unwrap();
        assert_eq!(tu.sigma, 4.0);
        assert_eq!(tu.delta, 0.0);
        assert_eq!(tu.row_threat.probs(), &[0.0, 0.0, 1.0]);
        assert_eq!(tu.col_threat.probs(), &[0.0, 0.0, 1.0]);
        assert_eq!(tu.disagreement, PayoffPoint::new(-2.0, -2.0));
        assert_eq!(tu.phi, PayoffPoint::new(2.0, 2.0));
        assert_eq!(tu.coop_cell, (0, 0));
        assert_eq!(tu.side_payment, 0.0);
    }

    #[test]
    fn tu_single_cell() {
        let g = Bimatrix::from_rows(&[[1.0]], &[[0.0]]).unwrap();
        let tu = tu_solution(&g).unwrap();
        assert_eq!((tu.sigma, tu.delta), (1.0, 1.0));
        assert_eq!(tu.phi, PayoffPoint::new(1.0, 0.0));
        assert_eq!(tu.side_payment, 0.0);
    }

    #[test]
    fn tu_side_payment_sign() {
        // Joint optimum pays everything to player 1; half must be transferred.
        let g = Bimatrix::from_rows(&[[4.0, 0.0], [0.0, 0.0]], &[[0.0, 0.0], [0.0, 0.0]]).unwrap();
        let tu = tu_solution(&g).unwrap();
        assert_eq!(tu.coop_cell, (0, 0));
        assert!((tu.phi.u + tu.phi.v - tu.sigma).abs() < COOP_TOL);
        assert!((tu.side_payment - (4.0 - tu.phi.u)).abs() < COOP_TOL);
        assert!(tu.side_payment > 0.0);
    }

    #[test]
    fn ntu_basic_default_threat() {
        let s = ntu_nash(&basic(), None).unwrap();
        assert_eq!(s.point, PayoffPoint::new(2.0, 2.0));
        assert_eq!(s.threat, PayoffPoint::new(-2.0, -2.0));
        assert_eq!(s.nash_product, 16.0);
        assert!(!s.degenerate);
    }

    #[test]
    fn ntu_origin_threat() {
        let s = ntu_nash(&basic(), Some(PayoffPoint::new(0.0, 0.0))).unwrap();
        assert_eq!(s.point, PayoffPoint::new(2.0, 2.0));
        assert_eq!(s.nash_product, 4.0);
    }

    #[test]
    fn ntu_square_corner() {
        let square = feasible_set(&[
            PayoffPoint::new(0.0, 0.0),
            PayoffPoint::new(1.0, 0.0),
            PayoffPoint::new(0.0, 1.0),
            PayoffPoint::new(1.0, 1.0),
        ])
        .unwrap();
        let s = nash_bargaining(&square, PayoffPoint::new(0.0, 0.0)).unwrap();
        assert_eq!(s.point, PayoffPoint::new(1.0, 1.0));
        assert_eq!(s.nash_product, 1.0);
    }

    #[test]
    fn ntu_interior_vertex_of_quadratic() {
        // Frontier u + v = 2 from (0, 2) to (2, 0), threat (0, 0): optimum (1, 1).
        let set = feasible_set(&[
            PayoffPoint::new(0.0, 0.0),
            PayoffPoint::new(2.0, 0.0),
            PayoffPoint::new(0.0, 2.0),
        ])
        .unwrap();
        let s = nash_bargaining(&set, PayoffPoint::new(0.0, 0.0)).unwrap();
        assert!(s.point.distance(&PayoffPoint::new(1.0, 1.0)) < 1e-12);
        assert!((s.nash_product - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ntu_threat_outside_set() {
        let err = ntu_nash(&basic(), Some(PayoffPoint::new(5.0, 5.0))).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn ntu_degenerate_when_threat_on_frontier() {
        let s = ntu_nash(&basic(), Some(PayoffPoint::new(2.0, 2.0))).unwrap();
        assert!(s.degenerate);
        assert_eq!(s.point, PayoffPoint::new(2.0, 2.0));
        assert_eq!(s.nash_product, 0.0);

        // Threat on the interior of a frontier edge: fall back to that point.
        let s = ntu_nash(&basic(), Some(PayoffPoint::new(-2.0, 4.0))).unwrap();
        assert!(s.degenerate);
        assert!(s.point.distance(&PayoffPoint::new(-2.0, 4.0)) < 1e-12);
    }

    #[test]
    fn sigma_piecewise() {
        let g = basic();
        assert_eq!(sigma_of_lambda(&g, 0.25).unwrap(), 4.5);
        assert_eq!(sigma_of_lambda(&g, 1.0).unwrap(), 4.0);
        assert_eq!(sigma_of_lambda(&g, 3.0).unwrap(), 12.0);
        assert!(matches!(sigma_of_lambda(&g, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn delta_linear() {
        let g = basic();
        assert_eq!(delta_of_lambda(&g, 0.5).unwrap(), 1.0);
        assert!(matches!(delta_of_lambda(&g, -2.0), Err(Error::Domain(_))));
        let same = Bimatrix::new(g.a().clone(), g.a().clone()).unwrap();
        assert_eq!(delta_of_lambda(&same, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn lambda_basic() {
        let s = lambda_transfer(&basic(), (1e-6, 1e6), 1e-9).unwrap();
        assert!((s.lambda_star - 1.0).abs() < 1e-6);
        assert_eq!(s.point, PayoffPoint::new(2.0, 2.0));
        assert!((s.lambda_star * s.point.u + s.point.v - s.sigma_of_lambda).abs() < 1e-6);
        assert!(s.iterations > 0);
    }

    #[test]
    fn lambda_symmetric_game() {
        let a = [[2.0, 0.0], [3.0, 1.0]];
        let b = [[2.0, 3.0], [0.0, 1.0]];
        let g = Bimatrix::from_rows(&a, &b).unwrap();
        let s = lambda_transfer(&g, (1e-6, 1e6), 1e-9).unwrap();
        assert!((s.lambda_star - 1.0).abs() < 1e-6);
        assert!((s.point.u - s.point.v).abs() < 1e-9);
    }

    #[test]
    fn lambda_root_on_frontier_edge() {
        // sigma is attained at (4, 1) and (1, 4), so the root sits on that edge.
        let a = [[0.0, 4.0], [1.0, 1.0]];
        let b = [[0.0, 1.0], [4.0, 1.0]];
        let g = Bimatrix::from_rows(&a, &b).unwrap();
        let s = lambda_transfer(&g, (1e-6, 1e6), 1e-9).unwrap();
        assert_eq!(s.lambda_star, 1.0);
        assert_eq!(s.point, PayoffPoint::new(2.5, 2.5));
    }

    #[test]
    fn lambda_single_point_frontier() {
        let g = Bimatrix::from_rows(&[[1.0]], &[[0.0]]).unwrap();
        let s = lambda_transfer(&g, (1e-6, 1e6), 1e-9).unwrap();
        assert_eq!(s.lambda_star, 1e-6);
        assert_eq!(s.point, PayoffPoint::new(1.0, 0.0));
        assert_eq!(s.iterations, 1);
    }

    #[test]
    fn lambda_bad_bracket() {
        let g = basic();
        assert!(matches!(
            lambda_transfer(&g, (0.0, 1.0), 1e-9),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            lambda_transfer(&g, (2.0, 1.0), 1e-9),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            lambda_transfer(&g, (1.0, 2.0), 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lambda_bracket_without_root() {
        // phi stays right of the face for lambda < 1.
        let err = lambda_transfer(&basic(), (0.1, 0.9), 1e-9).unwrap_err();
        match err {
            Error::NoConvergence { probes, .. } => {
                assert_eq!(probes.len(), 64);
                assert!(probes.iter().all(|&(_, g)| g > 0.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
