//! Brute-force reference hull. Every ordered pair is tested as a candidate
//! edge against all other points. Only used as a test oracle.

use super::hull::{finish_hull, Hull};
use super::point::{check_finite, Point2};
use super::GeometryError;

/// Counter-clockwise turn of `c` around `a -> b`.
fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn strictly_between(a: Point2, b: Point2, c: Point2) -> bool {
    let within = |lo: f64, hi: f64, v: f64| lo.min(hi) <= v && v <= lo.max(hi);
    c != a && c != b && within(a.x, b.x, c.x) && within(a.y, b.y, c.y)
}

/// `a -> b` is a hull edge (counter-clockwise, no collinear vertices) when
/// every other point is strictly to its left or strictly inside the segment.
fn is_hull_edge(points: &[Point2], a: Point2, b: Point2) -> bool {
    points.iter().all(|&c| {
        if c == a || c == b {
            return true;
        }
        let o = orient(a, b, c);
        o > 0.0 || (o == 0.0 && strictly_between(a, b, c))
    })
}

pub fn naive_convex_hull(points: &[Point2]) -> Result<Hull, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    check_finite(points)?;
    let mut distinct: Vec<Point2> = Vec::with_capacity(points.len());
    for &p in points {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    let lex_min = *distinct.iter().min_by(|a, b| a.lex_cmp(b)).unwrap();
    let lex_max = *distinct.iter().max_by(|a, b| a.lex_cmp(b)).unwrap();

    let collinear = distinct.len() < 3 || distinct.iter().all(|&c| orient(lex_min, lex_max, c) == 0.0);
    if collinear {
        let chain = if lex_min == lex_max {
            vec![lex_min]
        } else {
            vec![lex_min, lex_max]
        };
        return finish_hull(chain.clone(), chain);
    }

    let n = distinct.len();
    let mut next: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && is_hull_edge(&distinct, distinct[i], distinct[j]) {
                next[i] = Some(j);
                break;
            }
        }
    }

    // walk the counter-clockwise cycle from the leftmost-lowest vertex
    let start = distinct.iter().position(|&p| p == lex_min).unwrap();
    let mut cycle = vec![distinct[start]];
    let mut cur = start;
    while let Some(j) = next[cur] {
        if j == start || cycle.len() > n {
            break;
        }
        cycle.push(distinct[j]);
        cur = j;
    }

    let split = cycle.iter().position(|&p| p == lex_max).unwrap();
    let lower = cycle[..=split].to_vec();
    let mut upper: Vec<Point2> = cycle[split..].iter().rev().copied().collect();
    upper.insert(0, lex_min);
    finish_hull(upper, lower)
}
