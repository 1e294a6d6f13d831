//! The sort-then-scan hull: sort by `x`, then one left-to-right pass per chain.

use super::counter::ReadCounter;
use super::hull::{finish_hull, Hull};
use super::point::{sort_points, uh_check, Point2};
use super::GeometryError;

/// Appends `p` to `chain` and pops middle points while the last triple fails
/// `keep`. Shared by the sorted scan and the per-quarter scans.
#[inline]
pub(crate) fn push_and_fix(chain: &mut Vec<Point2>, p: Point2, keep: impl Fn(f64) -> bool) {
    chain.push(p);
    let mut l = chain.len();
    while l > 2 && !keep(uh_check(chain[l - 3], chain[l - 2], chain[l - 1])) {
        chain.remove(l - 2);
        l -= 1;
    }
}

/// Upper chain of a lexicographically sorted point list. Collinear middle
/// points pass the turn test and are kept.
pub fn find_upper_hull(sorted: &[Point2]) -> Vec<Point2> {
    let mut uh = Vec::new();
    for &p in sorted {
        push_and_fix(&mut uh, p, |s| s >= 0.0);
    }
    uh
}

/// Mirror of [`find_upper_hull`].
pub fn find_lower_hull(sorted: &[Point2]) -> Vec<Point2> {
    let mut lh = Vec::new();
    for &p in sorted {
        push_and_fix(&mut lh, p, |s| s <= 0.0);
    }
    lh
}

pub fn classic_convex_hull(points: &[Point2], counter: &mut ReadCounter) -> Result<Hull, GeometryError> {
    let sorted = sort_points(points)?;
    counter.charge_sort(points.len());
    counter.add(sorted.len());
    let upper = find_upper_hull(&sorted);
    counter.add(sorted.len());
    let lower = find_lower_hull(&sorted);
    finish_hull(upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().map(|&t| t.into()).collect()
    }

    #[test]
    fn upper_hull_examples() {
        let apex = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        assert_eq!(find_upper_hull(&apex), apex);
        let dip = pts(&[(0.0, 0.0), (1.0, -1.0), (2.0, 0.0)]);
        assert_eq!(find_upper_hull(&dip), pts(&[(0.0, 0.0), (2.0, 0.0)]));
    }

    #[test]
    fn upper_hull_backtracks_two_points() {
        // p4 and p3 are both removed once p5 arrives
        let s = pts(&[(0.0, 0.0), (1.0, 3.0), (2.0, 3.5), (3.0, 3.6), (4.0, 5.0)]);
        let partial = find_upper_hull(&s[..4]);
        assert_eq!(partial, s[..4].to_vec());
        assert_eq!(find_upper_hull(&s), vec![s[0], s[1], s[4]]);
    }

    #[test]
    fn lower_hull_examples() {
        let dip = pts(&[(0.0, 0.0), (1.0, -1.0), (2.0, 0.0)]);
        assert_eq!(find_lower_hull(&dip), dip);
        let apex = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        assert_eq!(find_lower_hull(&apex), pts(&[(0.0, 0.0), (2.0, 0.0)]));
    }

    #[test]
    fn square_chains_share_endpoints() {
        let s = sort_points(&pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)])).unwrap();
        assert_eq!(find_upper_hull(&s), pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)]));
        assert_eq!(find_lower_hull(&s), pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]));
    }

    #[test]
    fn triangle_hull() {
        let mut c = ReadCounter::new();
        let h = classic_convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]), &mut c).unwrap();
        assert_eq!(h.upper, pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]));
        assert_eq!(h.lower, pts(&[(0.0, 0.0), (1.0, 0.0)]));
        // 3 * ceil(log2 3) + 2 scans of 3
        assert_eq!(c.reads(), 12);
    }

    #[test]
    fn interior_point_excluded() {
        let mut c = ReadCounter::new();
        let input = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)]);
        let h = classic_convex_hull(&input, &mut c).unwrap();
        let mut v = h.vertices();
        v.sort_by(Point2::lex_cmp);
        assert_eq!(v, pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]));
    }

    #[test]
    fn degenerate_inputs() {
        let mut c = ReadCounter::new();
        match classic_convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]), &mut c) {
            Err(GeometryError::Degenerate { chain }) => assert_eq!(chain, pts(&[(0.0, 0.0), (2.0, 0.0)])),
            other => panic!("expected degenerate, got {other:?}"),
        }
        assert!(matches!(
            classic_convex_hull(&[p(1.0, 1.0), p(1.0, 1.0), p(2.0, 2.0)], &mut c),
            Err(GeometryError::Degenerate { .. })
        ));
    }
}
