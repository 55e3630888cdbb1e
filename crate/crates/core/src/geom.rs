//! Payoff-plane geometry: the convex feasible set spanned by the pure
//! outcomes, its Pareto frontier, and support-line queries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const CROSS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PayoffPoint {
    pub u: f64,
    pub v: f64,
}

impl PayoffPoint {
    pub const fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }

    pub fn distance(&self, other: &PayoffPoint) -> f64 {
        (self.u - other.u).hypot(self.v - other.v)
    }

    /// Weak dominance in both coordinates, strict in at least one.
    pub fn dominates(&self, other: &PayoffPoint) -> bool {
        self.u >= other.u && self.v >= other.v && (self.u > other.u || self.v > other.v)
    }

    pub fn translate(&self, du: f64, dv: f64) -> Self {
        Self::new(self.u + du, self.v + dv)
    }
}

impl From<(f64, f64)> for PayoffPoint {
    fn from((u, v): (f64, f64)) -> Self {
        Self { u, v }
    }
}

/// Closed segment with `a.u <= b.u`. A single point is the degenerate segment `a == b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: PayoffPoint,
    pub b: PayoffPoint,
}

impl Segment {
    /// Orders the endpoints by `u` (then `v`).
    pub fn new(p: PayoffPoint, q: PayoffPoint) -> Self {
        if (p.u, p.v) <= (q.u, q.v) {
            Self { a: p, b: q }
        } else {
            Self { a: q, b: p }
        }
    }

    pub fn point(p: PayoffPoint) -> Self {
        Self { a: p, b: p }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn length(&self) -> f64 {
        self.a.distance(&self.b)
    }

    /// Slope `dv/du`, `None` for vertical or degenerate segments.
    pub fn slope(&self) -> Option<f64> {
        let du = self.b.u - self.a.u;
        (du != 0.0).then(|| (self.b.v - self.a.v) / du)
    }

    /// Point at parameter `t` in `[0, 1]` from `a` to `b`.
    pub fn lerp(&self, t: f64) -> PayoffPoint {
        PayoffPoint::new(
            self.a.u + t * (self.b.u - self.a.u),
            self.a.v + t * (self.b.v - self.a.v),
        )
    }

    pub fn distance_to(&self, p: &PayoffPoint) -> f64 {
        let du = self.b.u - self.a.u;
        let dv = self.b.v - self.a.v;
        let len2 = du * du + dv * dv;
        if len2 == 0.0 {
            return self.a.distance(p);
        }
        let t = (((p.u - self.a.u) * du + (p.v - self.a.v) * dv) / len2).clamp(0.0, 1.0);
        self.lerp(t).distance(p)
    }
}

/// Convex hull of a payoff cloud with its Pareto frontier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibleSet {
    /// Counter-clockwise vertices; one or two entries for degenerate hulls.
    pub hull: Vec<PayoffPoint>,
    /// Chain from the maximal-`v` vertex to the maximal-`u` vertex.
    pub frontier: Vec<Segment>,
}

/// Result of a support-line query in direction `(lambda, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Support {
    pub value: f64,
    /// Face of the hull attaining `value`; degenerate when it is a vertex.
    pub face: Segment,
}

fn cross(o: &PayoffPoint, a: &PayoffPoint, b: &PayoffPoint) -> f64 {
    (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u)
}

fn scale_of(points: &[PayoffPoint]) -> f64 {
    points
        .iter()
        .fold(1.0_f64, |s, p| s.max(p.u.abs()).max(p.v.abs()))
}

/// Builds the feasible set of `points` by monotone chain, dropping collinear
/// and duplicate points.
pub fn feasible_set(points: &[PayoffPoint]) -> Result<FeasibleSet> {
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "feasible set needs at least one point".into(),
        ));
    }
    if let Some(p) = points.iter().find(|p| !p.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "non-finite payoff point {p:?}"
        )));
    }
    let scale = scale_of(points);
    let tol = CROSS_TOL * scale * scale;

    // Adding zero folds -0 into 0, which total_cmp would otherwise sort apart.
    let mut pts: Vec<PayoffPoint> = points
        .iter()
        .map(|p| PayoffPoint::new(p.u + 0.0, p.v + 0.0))
        .collect();
    pts.sort_by(|p, q| p.u.total_cmp(&q.u).then(p.v.total_cmp(&q.v)));
    pts.dedup();

    let hull = if pts.len() <= 1 {
        pts
    } else {
        let mut lower: Vec<PayoffPoint> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= tol
            {
                lower.pop();
            }
            lower.push(*p);
        }
        let mut upper: Vec<PayoffPoint> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= tol
            {
                upper.pop();
            }
            upper.push(*p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    };

    let frontier = pareto_chain(&hull);
    Ok(FeasibleSet { hull, frontier })
}

/// Walks the hull clockwise from the top vertex to the rightmost one.
fn pareto_chain(hull: &[PayoffPoint]) -> Vec<Segment> {
    let n = hull.len();
    let top = (0..n)
        .max_by(|&i, &j| {
            let (p, q) = (hull[i], hull[j]);
            p.v.total_cmp(&q.v).then(p.u.total_cmp(&q.u))
        })
        .expect("non-empty hull");
    let right = (0..n)
        .max_by(|&i, &j| {
            let (p, q) = (hull[i], hull[j]);
            p.u.total_cmp(&q.u).then(p.v.total_cmp(&q.v))
        })
        .expect("non-empty hull");
    if top == right {
        return vec![Segment::point(hull[top])];
    }
    let mut chain = Vec::new();
    let mut i = top;
    while i != right {
        // Counter-clockwise order, so clockwise steps go backwards.
        let next = (i + n - 1) % n;
        chain.push(Segment::new(hull[i], hull[next]));
        i = next;
    }
    chain
}

impl FeasibleSet {
    pub fn from_points(points: &[PayoffPoint]) -> Result<Self> {
        feasible_set(points)
    }

    /// Frontier vertices in chain order (maximal `v` first).
    pub fn frontier_vertices(&self) -> Vec<PayoffPoint> {
        let mut out = vec![self.frontier[0].a];
        for s in &self.frontier {
            if !s.is_degenerate() {
                out.push(s.b);
            }
        }
        out
    }

    fn scale(&self) -> f64 {
        scale_of(&self.hull)
    }

    /// Euclidean distance from `p` to the hull boundary (zero on it).
    pub fn boundary_distance(&self, p: &PayoffPoint) -> f64 {
        let n = self.hull.len();
        match n {
            1 => self.hull[0].distance(p),
            2 => Segment::new(self.hull[0], self.hull[1]).distance_to(p),
            _ => (0..n)
                .map(|i| Segment::new(self.hull[i], self.hull[(i + 1) % n]).distance_to(p))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Euclidean distance from `p` to the nearest point of the Pareto frontier.
    pub fn frontier_distance(&self, p: &PayoffPoint) -> f64 {
        self.frontier
            .iter()
            .map(|s| s.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: &PayoffPoint, tol: f64) -> bool {
        contains(self, p, tol)
    }

    pub fn support(&self, lambda: f64) -> Result<Support> {
        support(self, lambda)
    }

    /// Hull translated by `(du, dv)`.
    pub fn translate(&self, du: f64, dv: f64) -> Self {
        Self {
            hull: self.hull.iter().map(|p| p.translate(du, dv)).collect(),
            frontier: self
                .frontier
                .iter()
                .map(|s| Segment {
                    a: s.a.translate(du, dv),
                    b: s.b.translate(du, dv),
                })
                .collect(),
        }
    }
}

/// Whether `p` lies inside the hull or within `tol` of its boundary.
pub fn contains(s: &FeasibleSet, p: &PayoffPoint, tol: f64) -> bool {
    let n = s.hull.len();
    if n < 3 {
        return s.boundary_distance(p) <= tol;
    }
    let inside = (0..n).all(|i| {
        let a = &s.hull[i];
        let b = &s.hull[(i + 1) % n];
        let len = a.distance(b);
        cross(a, b, p) / len >= -tol
    });
    inside || s.boundary_distance(p) <= tol
}

/// Maximum of `lambda * u + v` over the hull and the face where it is attained.
pub fn support(s: &FeasibleSet, lambda: f64) -> Result<Support> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain(format!(
            "support direction needs lambda > 0, got {lambda}"
        )));
    }
    let score = |p: &PayoffPoint| lambda * p.u + p.v;
    let value = s.hull.iter().map(score).fold(f64::NEG_INFINITY, f64::max);
    let tol = CROSS_TOL * s.scale() * lambda.max(1.0);
    let on_face: Vec<PayoffPoint> = s
        .hull
        .iter()
        .copied()
        .filter(|p| score(p) >= value - tol)
        .collect();
    let face = match on_face.as_slice() {
        [p] => Segment::point(*p),
        pts => {
            let lo = pts
                .iter()
                .min_by(|p, q| p.u.total_cmp(&q.u).then(q.v.total_cmp(&p.v)))
                .expect("non-empty face");
            let hi = pts
                .iter()
                .max_by(|p, q| p.u.total_cmp(&q.u).then(q.v.total_cmp(&p.v)))
                .expect("non-empty face");
            Segment::new(*lo, *hi)
        }
    };
    Ok(Support { value, face })
}
