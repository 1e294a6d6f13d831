use serde::{Deserialize, Serialize};

use super::point::{uh_check, Point2};
use super::GeometryError;

/// A convex polygon stored as two x-monotone chains sharing their endpoints.
///
/// Both chains run left to right from the lexicographically smallest point
/// to the lexicographically largest one. A vertical edge at the left end
/// belongs to `upper`, a vertical edge at the right end belongs to `lower`.
/// Degenerate hulls (a single point or a segment) keep the same chain in
/// both fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hull {
    pub upper: Vec<Point2>,
    pub lower: Vec<Point2>,
}

impl Hull {
    pub fn new(upper: Vec<Point2>, lower: Vec<Point2>) -> Self {
        Hull { upper, lower }
    }

    /// Point or segment hull for inputs with no interior.
    pub fn degenerate(chain: Vec<Point2>) -> Self {
        Hull {
            upper: chain.clone(),
            lower: chain,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.upper == self.lower
    }

    pub fn x_min(&self) -> Point2 {
        self.upper[0]
    }

    pub fn x_max(&self) -> Point2 {
        *self.upper.last().expect("hull chains are never empty")
    }

    /// Vertices in counter-clockwise order starting at the leftmost point.
    pub fn vertices(&self) -> Vec<Point2> {
        if self.is_degenerate() {
            return self.upper.clone();
        }
        let mut out = self.lower.clone();
        let n = self.upper.len();
        if n > 2 {
            out.extend(self.upper[1..n - 1].iter().rev());
        }
        out
    }

    pub fn canonicalize(&self) -> Hull {
        Hull {
            upper: canonical_chain(&self.upper),
            lower: canonical_chain(&self.lower),
        }
    }

    pub fn contains(&self, p: Point2) -> bool {
        point_in_hull(self, p)
    }
}

/// Drops repeated points and interior vertices whose turn test is exactly zero.
pub(crate) fn canonical_chain(chain: &[Point2]) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(chain.len());
    for &v in chain {
        if out.last() == Some(&v) {
            continue;
        }
        while out.len() >= 2 && uh_check(out[out.len() - 2], out[out.len() - 1], v) == 0.0 {
            out.pop();
        }
        out.push(v);
    }
    out
}

/// Canonicalizes both chains and rejects hulls without interior.
pub(crate) fn finish_hull(upper: Vec<Point2>, lower: Vec<Point2>) -> Result<Hull, GeometryError> {
    let hull = Hull::new(upper, lower).canonicalize();
    if hull.is_degenerate() {
        return Err(GeometryError::Degenerate { chain: hull.upper });
    }
    Ok(hull)
}

pub fn canonicalize_hull(h: &Hull) -> Hull {
    h.canonicalize()
}

/// Boundary-inclusive containment: `p` must be on or below the upper chain and
/// on or above the lower chain at `p.x`.
pub fn point_in_hull(h: &Hull, p: Point2) -> bool {
    let (Some(first), Some(last)) = (h.upper.first(), h.upper.last()) else {
        return false;
    };
    if p.x < first.x || p.x > last.x {
        return false;
    }
    below_upper(&h.upper, p) && above_lower(&h.lower, p)
}

fn below_upper(upper: &[Point2], p: Point2) -> bool {
    // first vertex with x >= p.x
    let k = upper.partition_point(|v| v.x < p.x);
    if k == upper.len() {
        return false;
    }
    if upper[k].x == p.x {
        // highest vertex in this column bounds the chain from above
        let top = upper[k..]
            .iter()
            .take_while(|v| v.x == p.x)
            .map(|v| v.y)
            .fold(f64::NEG_INFINITY, f64::max);
        return p.y <= top;
    }
    if k == 0 {
        return false;
    }
    uh_check(upper[k - 1], p, upper[k]) <= 0.0
}

fn above_lower(lower: &[Point2], p: Point2) -> bool {
    // first vertex with x > p.x
    let k = lower.partition_point(|v| v.x <= p.x);
    if k > 0 && lower[k - 1].x == p.x {
        let bottom = lower[..k]
            .iter()
            .rev()
            .take_while(|v| v.x == p.x)
            .map(|v| v.y)
            .fold(f64::INFINITY, f64::min);
        return p.y >= bottom;
    }
    if k == 0 || k == lower.len() {
        return false;
    }
    uh_check(lower[k - 1], p, lower[k]) >= 0.0
}
