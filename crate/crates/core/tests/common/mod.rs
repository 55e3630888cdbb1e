#![allow(dead_code)]

use coopgame::{
    lambda_transfer_with, nash_bargaining, ntu_nash, tu_solution, Bimatrix, Error, FeasibleSet,
    LambdaOptions, Matrix, PayoffPoint,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: f64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    Matrix::new(rows, cols, data).unwrap()
}

pub fn random_game(rng: &mut impl Rng, max_dim: usize, bound: f64) -> Bimatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    Bimatrix::new(
        random_matrix(rng, rows, cols, bound),
        random_matrix(rng, rows, cols, bound),
    )
    .unwrap()
}

pub fn transpose_game(a: &Matrix) -> Bimatrix {
    Bimatrix::new(a.clone(), a.transpose()).unwrap()
}

/// `n` points spread over the frontier proportionally to segment length,
/// always including every vertex.
pub fn sample_frontier(set: &FeasibleSet, n: usize) -> Vec<PayoffPoint> {
    let total: f64 = set.frontier.iter().map(|s| s.length()).sum();
    let mut out = set.frontier_vertices();
    if total == 0.0 {
        return out;
    }
    for s in &set.frontier {
        let k = ((s.length() / total) * n as f64).ceil() as usize;
        out.extend((1..k).map(|i| s.lerp(i as f64 / k as f64)));
    }
    out
}

pub fn product(p: &PayoffPoint, threat: &PayoffPoint) -> f64 {
    (p.u - threat.u) * (p.v - threat.v)
}

/// Brute-force Nash bargaining: best sample among points strictly dominating the threat.
pub fn scan_bargaining(
    set: &FeasibleSet,
    threat: &PayoffPoint,
    n: usize,
) -> Option<(PayoffPoint, f64)> {
    sample_frontier(set, n)
        .into_iter()
        .filter(|p| p.u > threat.u && p.v > threat.v)
        .map(|p| (p, product(&p, threat)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

/// Value of a 2 x n zero-sum game by scanning the breakpoints of the lower
/// envelope of the column payoff lines in the row mixture `p`.
pub fn two_row_value(m: &Matrix) -> f64 {
    assert_eq!(m.rows(), 2);
    let n = m.cols();
    let line = |j: usize, p: f64| p * m.get(0, j) + (1.0 - p) * m.get(1, j);
    let envelope = |p: f64| (0..n).map(|j| line(j, p)).fold(f64::INFINITY, f64::min);
    let mut candidates = vec![0.0, 1.0];
    for j in 0..n {
        for k in j + 1..n {
            // p (a0j - a1j - a0k + a1k) = a1k - a1j
            let denom = m.get(0, j) - m.get(1, j) - m.get(0, k) + m.get(1, k);
            if denom != 0.0 {
                let p = (m.get(1, k) - m.get(1, j)) / denom;
                if (0.0..=1.0).contains(&p) {
                    candidates.push(p);
                }
            }
        }
    }
    candidates
        .into_iter()
        .map(envelope)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Whether some point of the convex hull of `points` dominates `v`. Checks
/// every segment between two inputs (including degenerate ones) against the
/// closed quadrant above and to the right of `v`.
pub fn dominated_in_hull(points: &[PayoffPoint], v: &PayoffPoint) -> bool {
    const EPS: f64 = 1e-12;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i..] {
            let (mut t0, mut t1) = (0.0f64, 1.0f64);
            let mut feasible = true;
            // Clip p + t (q - p) to u >= v.u and v >= v.v.
            for (start, delta, bound) in [(p.u, q.u - p.u, v.u), (p.v, q.v - p.v, v.v)] {
                if delta == 0.0 {
                    feasible &= start >= bound;
                } else if delta > 0.0 {
                    t0 = t0.max((bound - start) / delta);
                } else {
                    t1 = t1.min((bound - start) / delta);
                }
            }
            if !feasible || t0 > t1 {
                continue;
            }
            let a = PayoffPoint::new(p.u + t0 * (q.u - p.u), p.v + t0 * (q.v - p.v));
            let b = PayoffPoint::new(p.u + t1 * (q.u - p.u), p.v + t1 * (q.v - p.v));
            if a.distance(v) > EPS || b.distance(v) > EPS {
                return true;
            }
        }
    }
    false
}

pub fn frontier_length(set: &FeasibleSet) -> f64 {
    set.frontier.iter().map(|s| s.length()).sum()
}

/// `n` evenly spaced points along the whole frontier chain.
pub fn even_frontier(set: &FeasibleSet, n: usize) -> Vec<PayoffPoint> {
    let total = frontier_length(set);
    if total == 0.0 || n < 2 {
        return set.frontier_vertices();
    }
    let mut out = Vec::with_capacity(n);
    let mut seg = 0;
    let mut walked = 0.0;
    for k in 0..n {
        let target = total * k as f64 / (n - 1) as f64;
        while seg + 1 < set.frontier.len() && walked + set.frontier[seg].length() < target {
            walked += set.frontier[seg].length();
            seg += 1;
        }
        let s = &set.frontier[seg];
        let t = if s.length() > 0.0 {
            ((target - walked) / s.length()).clamp(0.0, 1.0)
        } else {
            0.0
        };
        out.push(s.lerp(t));
    }
    out
}

/// Outcome of one randomized axiom check: `Ok(false)` means the instance did
/// not meet the check's precondition and was skipped.
pub type Check = Result<bool, String>;

pub fn check_pareto(g: &Bimatrix) -> Check {
    let set = g.feasible_set();
    let ntu = ntu_nash(g, None).map_err(|e| e.to_string())?;
    let d = set.frontier_distance(&ntu.point);
    if d > 1e-6 {
        return Err(format!(
            "ntu_nash point {:?} is {d} off the frontier",
            ntu.point
        ));
    }
    match lambda_transfer_with(g, LambdaOptions::default()) {
        Ok(s) => {
            let d = set.frontier_distance(&s.point);
            if d > 1e-6 {
                return Err(format!(
                    "lambda point {:?} is {d} off the frontier",
                    s.point
                ));
            }
        }
        Err(Error::NoConvergence { .. }) => {}
        Err(e) => return Err(e.to_string()),
    }
    Ok(true)
}

/// Every near-maximal sample of `n` evenly spaced frontier points clusters
/// around the returned bargaining point.
pub fn check_uniqueness(g: &Bimatrix, n: usize) -> Check {
    let set = g.feasible_set();
    let ntu = ntu_nash(g, None).map_err(|e| e.to_string())?;
    if ntu.degenerate {
        return Ok(false);
    }
    let samples = even_frontier(&set, n);
    let best = samples
        .iter()
        .map(|p| product(p, &ntu.threat))
        .fold(ntu.nash_product, f64::max);
    for p in &samples {
        if product(p, &ntu.threat) >= best - 1e-9 {
            let gap = (p.u - ntu.point.u).abs().max((p.v - ntu.point.v).abs());
            if gap > 1e-4 {
                return Err(format!(
                    "near-maximal sample {p:?} is {gap} from {:?}",
                    ntu.point
                ));
            }
        }
    }
    Ok(true)
}

/// Positive affine change of one player's utility moves the solution along.
pub fn check_affine(g: &Bimatrix, scale: f64, shift: f64, player: usize) -> Check {
    let ntu = ntu_nash(g, None).map_err(|e| e.to_string())?;
    let f = |x: f64| scale * x + shift;
    let (moved, threat) = if player == 0 {
        (
            Bimatrix::new(g.a().map(f), g.b().clone()),
            PayoffPoint::new(f(ntu.threat.u), ntu.threat.v),
        )
    } else {
        (
            Bimatrix::new(g.a().clone(), g.b().map(f)),
            PayoffPoint::new(ntu.threat.u, f(ntu.threat.v)),
        )
    };
    let moved = moved.map_err(|e| e.to_string())?;
    let got = ntu_nash(&moved, Some(threat)).map_err(|e| e.to_string())?;
    let want = if player == 0 {
        PayoffPoint::new(f(ntu.point.u), ntu.point.v)
    } else {
        PayoffPoint::new(ntu.point.u, f(ntu.point.v))
    };
    let gap = (got.point.u - want.u)
        .abs()
        .max((got.point.v - want.v).abs());
    if gap > 1e-8 {
        return Err(format!(
            "affine image {:?} differs from {want:?} by {gap}",
            got.point
        ));
    }
    Ok(true)
}

/// Dropping outcomes that keep the threat and the solution feasible leaves
/// the solution in place. `keep[i]` selects the retained outcomes.
pub fn check_iia(g: &Bimatrix, keep: &[bool]) -> Check {
    let ntu = ntu_nash(g, None).map_err(|e| e.to_string())?;
    let kept: Vec<PayoffPoint> = g
        .outcomes()
        .into_iter()
        .zip(keep)
        .filter_map(|(p, &k)| k.then_some(p))
        .collect();
    if kept.is_empty() {
        return Ok(false);
    }
    let smaller = FeasibleSet::from_points(&kept).map_err(|e| e.to_string())?;
    if !smaller.contains(&ntu.threat, 1e-9) || !smaller.contains(&ntu.point, 1e-9) {
        return Ok(false);
    }
    let got = nash_bargaining(&smaller, ntu.threat).map_err(|e| e.to_string())?;
    let gap = got.point.distance(&ntu.point);
    if gap > 1e-9 {
        return Err(format!(
            "after deletion {:?} moved from {:?} by {gap}",
            got.point, ntu.point
        ));
    }
    Ok(true)
}

/// Brute-force comparison against the best of `n` frontier samples.
pub fn check_scan(g: &Bimatrix, n: usize, tol: f64) -> Check {
    let set = g.feasible_set();
    let ntu = ntu_nash(g, None).map_err(|e| e.to_string())?;
    let Some((best, value)) = scan_bargaining(&set, &ntu.threat, n) else {
        return if ntu.degenerate {
            Ok(true)
        } else {
            Err("scan found nothing dominating the threat".into())
        };
    };
    if ntu.degenerate {
        return Err(format!(
            "scan found {best:?} dominating a degenerate threat"
        ));
    }
    let gap = (best.u - ntu.point.u)
        .abs()
        .max((best.v - ntu.point.v).abs());
    if gap > tol {
        return Err(format!(
            "scan maximum {best:?} is {gap} from {:?}",
            ntu.point
        ));
    }
    if value > ntu.nash_product + 1e-9 {
        return Err(format!("scan product {value} beats {}", ntu.nash_product));
    }
    Ok(true)
}

/// Symmetric game `B = A^T`: every method lands on the diagonal.
pub fn check_symmetric(a: &Matrix) -> Check {
    let g = transpose_game(a);
    let tu = tu_solution(&g).map_err(|e| e.to_string())?;
    let on_diagonal = |label: &str, p: &PayoffPoint| {
        if (p.u - p.v).abs() > 1e-9 {
            Err(format!("{label} {p:?} is off the diagonal"))
        } else {
            Ok(())
        }
    };
    if tu.delta.abs() > 1e-9 {
        return Err(format!("delta = {}", tu.delta));
    }
    on_diagonal("disagreement", &tu.disagreement)?;
    on_diagonal("phi", &tu.phi)?;
    on_diagonal(
        "ntu_nash",
        &ntu_nash(&g, None).map_err(|e| e.to_string())?.point,
    )?;
    let lam = lambda_transfer_with(&g, LambdaOptions::default()).map_err(|e| e.to_string())?;
    on_diagonal("lambda", &lam.point)?;
    if g.feasible_set().contains(&tu.phi, 1e-9) && lam.point.distance(&tu.phi) > 1e-6 {
        return Err(format!(
            "lambda point {:?} differs from phi {:?}",
            lam.point, tu.phi
        ));
    }
    Ok(true)
}
