use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GeometryError;

/// A point in the plane. Coordinates must be finite before the point enters
/// any of the hull routines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on `(x, y)`. Callers guarantee finite coordinates.
    pub fn lex_cmp(&self, other: &Point2) -> Ordering {
        self.x
            .partial_cmp(&other.x)
            .unwrap_or(Ordering::Equal)
            .then_with(|| self.y.partial_cmp(&other.y).unwrap_or(Ordering::Equal))
    }

    pub(crate) fn reflect(self, sx: f64, sy: f64) -> Point2 {
        Point2::new(sx * self.x, sy * self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The upper-hull turn test.
///
/// Returns `(b.y - a.y)(c.x - a.x) - (b.x - a.x)(c.y - a.y)`. For `a.x < c.x`
/// a non-negative value means `b` lies on or above the segment `a -> c`.
/// No tolerance is applied; the sign is compared against zero exactly.
#[inline]
pub fn uh_check(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.y - a.y) * (c.x - a.x) - (b.x - a.x) * (c.y - a.y)
}

pub(crate) fn check_finite(points: &[Point2]) -> Result<(), GeometryError> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(GeometryError::NonFinite { index }),
        None => Ok(()),
    }
}

/// Sorts by `x` then `y` and drops exact duplicates.
pub fn sort_points(points: &[Point2]) -> Result<Vec<Point2>, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    check_finite(points)?;
    let mut sorted = points.to_vec();
    sorted.sort_by(Point2::lex_cmp);
    sorted.dedup();
    Ok(sorted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn uh_check_examples() {
        assert_eq!(uh_check(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 0.0)), 2.0);
        assert_eq!(uh_check(p(0.0, 0.0), p(1.0, -1.0), p(2.0, 0.0)), -2.0);
        assert_eq!(uh_check(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)), 0.0);
    }

    #[test]
    fn sort_orders_lexicographically() {
        let s = sort_points(&[p(2.0, 0.0), p(0.0, 0.0), p(1.0, 5.0)]).unwrap();
        assert_eq!(s, vec![p(0.0, 0.0), p(1.0, 5.0), p(2.0, 0.0)]);
        let s = sort_points(&[p(1.0, 2.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(s, vec![p(1.0, 1.0), p(1.0, 2.0)]);
    }

    #[test]
    fn sort_removes_duplicates() {
        let s = sort_points(&[p(0.0, 0.0), p(0.0, 0.0)]).unwrap();
        assert_eq!(s, vec![p(0.0, 0.0)]);
    }

    #[test]
    fn sort_rejects_empty_and_non_finite() {
        assert!(matches!(sort_points(&[]), Err(GeometryError::EmptyInput)));
        assert!(matches!(
            sort_points(&[p(0.0, 0.0), p(f64::NAN, 1.0)]),
            Err(GeometryError::NonFinite { index: 1 })
        ));
    }
}
