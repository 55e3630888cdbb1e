//! Finite two-player zero-sum matrix games.
//!
//! The row player maximizes and the column player minimizes `pᵀ M q`. A game
//! with a saddle point is answered directly; otherwise the value is found with
//! a dense simplex on the shifted-positive formulation.

use std::fmt;
use std::ops::{Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used when comparing game values.
pub const VALUE_TOL: f64 = 1e-9;
/// Tolerance used when normalizing probability vectors.
pub const PROB_TOL: f64 = 1e-12;

const PIVOT_EPS: f64 = 1e-12;
const MAX_PIVOTS: usize = 10_000;

/// Dense row-major matrix of finite payoffs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "entry ({}, {}) is not finite",
                pos / cols,
                pos % cols
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows, rejecting ragged input.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(n_rows, n_cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.cols).map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend((0..self.rows).map(|i| self.get(i, j)));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Applies `f` entrywise. Panics if `f` produces a non-finite value.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let data: Vec<f64> = self.data.iter().map(|&x| f(x)).collect();
        assert!(
            data.iter().all(|x| x.is_finite()),
            "non-finite entry after map"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Entrywise `self * scale + other * other_scale`; shapes must agree.
    pub fn combine(&self, scale: f64, other: &Matrix, other_scale: f64) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::InvalidInput(format!(
                "shape mismatch: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| scale * a + other_scale * b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn min_entry(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `pᵀ M q`.
    pub fn bilinear(&self, p: &[f64], q: &[f64]) -> f64 {
        assert_eq!(p.len(), self.rows);
        assert_eq!(q.len(), self.cols);
        (0..self.rows)
            .map(|i| p[i] * (0..self.cols).map(|j| self.get(i, j) * q[j]).sum::<f64>())
            .sum()
    }

    /// Payoffs of each column against the row mixture `p`: `pᵀ M eⱼ`.
    pub fn column_payoffs(&self, p: &[f64]) -> Vec<f64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| p[i] * self.get(i, j)).sum())
            .collect()
    }

    /// Payoffs of each row against the column mixture `q`: `eᵢᵀ M q`.
    pub fn row_payoffs(&self, q: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(q).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

impl Sub for &Matrix {
    type Output = Result<Matrix>;

    fn sub(self, rhs: &Matrix) -> Result<Matrix> {
        self.combine(1.0, rhs, -1.0)
    }
}

impl TryFrom<Vec<Vec<f64>>> for Matrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

impl From<Matrix> for Vec<Vec<f64>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x}")).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Probability vector over a player's pure strategies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MixedStrategy(Vec<f64>);

impl MixedStrategy {
    /// The pure strategy `index` among `n`.
    pub fn pure(n: usize, index: usize) -> Self {
        let mut probs = vec![0.0; n];
        probs[index] = 1.0;
        Self(probs)
    }

    /// Normalizes non-negative weights into a strategy. Entries slightly below
    /// zero (round-off) are clamped.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < -PROB_TOL) {
            return Err(Error::InvalidInput(format!(
                "weights must be finite and non-negative: {weights:?}"
            )));
        }
        let clamped: Vec<f64> = weights.iter().map(|w| w.max(0.0)).collect();
        let total: f64 = clamped.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidInput("weights sum to zero".into()));
        }
        Ok(Self(
            clamped
                .iter()
                .map(|w| (w / total).clamp(0.0, 1.0))
                .collect(),
        ))
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the single pure strategy played with probability one, if any.
    pub fn as_pure(&self) -> Option<usize> {
        let i = self.0.iter().position(|&p| (p - 1.0).abs() <= PROB_TOL)?;
        self.0
            .iter()
            .enumerate()
            .all(|(k, &p)| k == i || p.abs() <= PROB_TOL)
            .then_some(i)
    }
}

/// A cell that is both its row's minimum and its column's maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddlePoint {
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

/// Value of a zero-sum game together with one optimal strategy per player.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameValue {
    pub value: f64,
    pub row_strategy: MixedStrategy,
    pub col_strategy: MixedStrategy,
    pub via_saddle: bool,
}

fn comparison_eps(m: &Matrix) -> f64 {
    PROB_TOL * m.max_abs().max(1.0)
}

/// Lexicographically first saddle point of `m`, if one exists.
pub fn saddle_point(m: &Matrix) -> Option<SaddlePoint> {
    let eps = comparison_eps(m);
    let row_min: Vec<f64> = (0..m.rows())
        .map(|i| m.row(i).iter().copied().fold(f64::INFINITY, f64::min))
        .collect();
    let col_max: Vec<f64> = (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .map(|i| m.get(i, j))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    for (i, &lo) in row_min.iter().enumerate() {
        for (j, &hi) in col_max.iter().enumerate() {
            let x = m.get(i, j);
            if x <= lo + eps && x >= hi - eps {
                return Some(SaddlePoint {
                    row: i,
                    col: j,
                    value: x,
                });
            }
        }
    }
    None
}

/// Pure-strategy security levels `(max_i min_j mᵢⱼ, min_j max_i mᵢⱼ)`.
pub fn value_bounds(m: &Matrix) -> (f64, f64) {
    let maximin = (0..m.rows())
        .map(|i| m.row(i).iter().copied().fold(f64::INFINITY, f64::min))
        .fold(f64::NEG_INFINITY, f64::max);
    let minimax = (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .map(|i| m.get(i, j))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .fold(f64::INFINITY, f64::min);
    (maximin, minimax)
}

/// Solves the zero-sum game `m`.
pub fn solve(m: &Matrix) -> Result<GameValue> {
    if let Some(sp) = saddle_point(m) {
        return Ok(GameValue {
            value: sp.value,
            row_strategy: MixedStrategy::pure(m.rows(), sp.row),
            col_strategy: MixedStrategy::pure(m.cols(), sp.col),
            via_saddle: true,
        });
    }
    solve_lp(m)
}

/// Solves `m` by linear programming, skipping the saddle-point shortcut.
pub fn solve_lp(m: &Matrix) -> Result<GameValue> {
    let shift = 1.0 - m.min_entry();
    let shifted = m.map(|x| x + shift);
    let (y, x) = Simplex::packing(&shifted)?.run()?;

    let total: f64 = y.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::NoConvergence {
            reason: "simplex returned an empty primal solution".into(),
            probes: Vec::new(),
        });
    }
    let shifted_value = 1.0 / total;
    Ok(GameValue {
        value: shifted_value - shift,
        row_strategy: MixedStrategy::from_weights(&x)?,
        col_strategy: MixedStrategy::from_weights(&y)?,
        via_saddle: false,
    })
}

/// Dense tableau for `max Σy  s.t.  M y ≤ 1, y ≥ 0` with a slack basis.
/// Entering and leaving variables follow Bland's rule.
struct Simplex {
    rows: usize,
    cols: usize,
    // (rows + 1) x (cols + rows + 1); last row is the objective.
    tableau: Vec<f64>,
    basis: Vec<usize>,
}

impl Simplex {
    fn packing(m: &Matrix) -> Result<Self> {
        let (rows, cols) = m.shape();
        let width = cols + rows + 1;
        let mut tableau = vec![0.0; (rows + 1) * width];
        for i in 0..rows {
            for j in 0..cols {
                tableau[i * width + j] = m.get(i, j);
            }
            tableau[i * width + cols + i] = 1.0;
            tableau[i * width + width - 1] = 1.0;
        }
        for j in 0..cols {
            tableau[rows * width + j] = -1.0;
        }
        Ok(Self {
            rows,
            cols,
            tableau,
            basis: (cols..cols + rows).collect(),
        })
    }

    fn width(&self) -> usize {
        self.cols + self.rows + 1
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.tableau[i * self.width() + j]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width();
        let p = self.at(r, c);
        for j in 0..w {
            self.tableau[r * w + j] /= p;
        }
        for i in 0..=self.rows {
            if i == r {
                continue;
            }
            let factor = self.at(i, c);
            if factor == 0.0 {
                continue;
            }
            for j in 0..w {
                let delta = factor * self.tableau[r * w + j];
                self.tableau[i * w + j] -= delta;
            }
        }
        self.basis[r] = c;
    }

    /// Returns the primal `y` and the dual `x` (slack reduced costs).
    fn run(mut self) -> Result<(Vec<f64>, Vec<f64>)> {
        let w = self.width();
        for _ in 0..MAX_PIVOTS {
            let entering = (0..w - 1).find(|&j| self.at(self.rows, j) < -PIVOT_EPS);
            let Some(c) = entering else {
                let mut y = vec![0.0; self.cols];
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < self.cols {
                        y[b] = self.at(i, w - 1);
                    }
                }
                let x = (0..self.rows)
                    .map(|i| self.at(self.rows, self.cols + i))
                    .collect();
                return Ok((y, x));
            };
            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.rows {
                let a = self.at(i, c);
                if a <= PIVOT_EPS {
                    continue;
                }
                let ratio = self.at(i, w - 1) / a;
                leaving = match leaving {
                    None => Some((i, ratio)),
                    Some((k, best)) => {
                        if ratio < best - PIVOT_EPS
                            || (ratio <= best + PIVOT_EPS && self.basis[i] < self.basis[k])
                        {
                            Some((i, ratio))
                        } else {
                            Some((k, best))
                        }
                    }
                };
            }
            let Some((r, _)) = leaving else {
                return Err(Error::NoConvergence {
                    reason: "linear program is unbounded".into(),
                    probes: Vec::new(),
                });
            };
            self.pivot(r, c);
        }
        Err(Error::NoConvergence {
            reason: format!("simplex exceeded {MAX_PIVOTS} pivots"),
            probes: Vec::new(),
        })
    }
}
