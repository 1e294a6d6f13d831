//! Convex hull by candidate elimination.
//!
//! The four extreme points split the hull into four quarters. One scan keeps
//! only the points on the outer side of each quarter's chord. Each quarter is
//! then walked from its x-extreme toward its y-extreme: the next point in
//! x-order is extracted from the candidate list, every candidate strictly
//! inside the line from that point to the y-extreme is dropped, and the
//! extracted point is pushed onto the chain with the same backtracking step as
//! the sorted scan. Nothing is ever sorted.
//!
//! The three quarters other than upper-left are handled by reflecting
//! coordinates so that they look like the upper-left case. Negation is exact,
//! so turn tests in a reflected frame are exact negations of the originals.

use std::cmp::Ordering;
use std::ops::Index;

use super::classic::push_and_fix;
use super::counter::ReadCounter;
use super::hull::{finish_hull, Hull};
use super::point::{check_finite, uh_check, Point2};
use super::GeometryError;

/// Extreme points of a point set.
///
/// `x_min`/`x_max` are the lexicographic minimum and maximum on `(x, y)`.
/// `y_min`/`y_max` are the lowest and highest points, leftmost on ties.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremes {
    pub x_min: Point2,
    pub x_max: Point2,
    pub y_min: Point2,
    pub y_max: Point2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarterKind {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

impl QuarterKind {
    pub const ALL: [QuarterKind; 4] = [
        QuarterKind::UpperLeft,
        QuarterKind::UpperRight,
        QuarterKind::LowerLeft,
        QuarterKind::LowerRight,
    ];

    fn index(self) -> usize {
        self as usize
    }

    /// Sign flips that map this quarter onto the upper-left case.
    fn frame(self) -> (f64, f64) {
        match self {
            QuarterKind::UpperLeft => (1.0, 1.0),
            QuarterKind::UpperRight => (-1.0, 1.0),
            QuarterKind::LowerLeft => (1.0, -1.0),
            QuarterKind::LowerRight => (-1.0, -1.0),
        }
    }

    fn is_right(self) -> bool {
        matches!(self, QuarterKind::UpperRight | QuarterKind::LowerRight)
    }

    /// Chain endpoints in left-to-right order.
    pub fn anchors(self, ex: &Extremes) -> (Point2, Point2) {
        match self {
            QuarterKind::UpperLeft => (ex.x_min, ex.y_max),
            QuarterKind::UpperRight => (ex.y_max, ex.x_max),
            QuarterKind::LowerLeft => (ex.x_min, ex.y_min),
            QuarterKind::LowerRight => (ex.y_min, ex.x_max),
        }
    }

    /// `(x-extreme, y-extreme)`: where the walk starts and its fixed far end.
    fn walk(self, anchors: (Point2, Point2)) -> (Point2, Point2) {
        if self.is_right() {
            (anchors.1, anchors.0)
        } else {
            anchors
        }
    }
}

/// Candidate lists for the four quarters.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QuarterCandidates {
    lists: [Vec<Point2>; 4],
}

impl QuarterCandidates {
    pub fn total(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }
}

impl Index<QuarterKind> for QuarterCandidates {
    type Output = Vec<Point2>;

    fn index(&self, q: QuarterKind) -> &Vec<Point2> {
        &self.lists[q.index()]
    }
}

pub fn find_extremes(points: &[Point2], counter: &mut ReadCounter) -> Result<Extremes, GeometryError> {
    let first = *points.first().ok_or(GeometryError::EmptyInput)?;
    let mut ex = Extremes {
        x_min: first,
        x_max: first,
        y_min: first,
        y_max: first,
    };
    for &p in &points[1..] {
        if p.lex_cmp(&ex.x_min) == Ordering::Less {
            ex.x_min = p;
        }
        if p.lex_cmp(&ex.x_max) == Ordering::Greater {
            ex.x_max = p;
        }
        if p.y < ex.y_min.y || (p.y == ex.y_min.y && p.x < ex.y_min.x) {
            ex.y_min = p;
        }
        if p.y > ex.y_max.y || (p.y == ex.y_max.y && p.x < ex.y_max.x) {
            ex.y_max = p;
        }
    }
    counter.add(points.len());
    Ok(ex)
}

/// One scan that keeps, per quarter, the points on or outside its chord.
/// Extreme points land in more than one list.
pub fn initial_candidate_elimination(points: &[Point2], ex: &Extremes, counter: &mut ReadCounter) -> QuarterCandidates {
    let chords = QuarterKind::ALL.map(|q| {
        let (sx, sy) = q.frame();
        let (start, end) = q.walk(q.anchors(ex));
        (sx, sy, start.reflect(sx, sy), end.reflect(sx, sy))
    });
    let mut out = QuarterCandidates::default();
    for &p in points {
        for (list, &(sx, sy, start, end)) in out.lists.iter_mut().zip(chords.iter()) {
            if uh_check(start, p.reflect(sx, sy), end) >= 0.0 {
                list.push(p);
            }
        }
    }
    counter.add(points.len());
    out
}

fn lex_min_index(points: &[Point2]) -> Option<usize> {
    (0..points.len()).min_by(|&a, &b| points[a].lex_cmp(&points[b]))
}

/// Walks one quarter. `anchors` are the chain endpoints in left-to-right
/// order; the returned chain is left to right as well.
pub fn find_quarter_hull(
    candidates: &[Point2],
    quarter: QuarterKind,
    anchors: (Point2, Point2),
    counter: &mut ReadCounter,
) -> Vec<Point2> {
    if anchors.0 == anchors.1 {
        return vec![anchors.0];
    }
    if candidates.is_empty() {
        return vec![anchors.0, anchors.1];
    }
    let (sx, sy) = quarter.frame();
    let (_, end) = quarter.walk(anchors);
    let end = end.reflect(sx, sy);

    let mut cand: Vec<Point2> = candidates.iter().map(|p| p.reflect(sx, sy)).collect();
    let mut chain: Vec<Point2> = Vec::new();

    counter.add(cand.len());
    let mut next = lex_min_index(&cand).unwrap();
    loop {
        let nx = cand.swap_remove(next);
        push_and_fix(&mut chain, nx, |s| s >= 0.0);
        if cand.is_empty() {
            break;
        }
        // drop copies of nx and everything strictly below nx -> end, and find
        // the next point in x-order within the same pass
        counter.add(cand.len());
        let mut kept = 0;
        let mut best: Option<usize> = None;
        for r in 0..cand.len() {
            let q = cand[r];
            if q == nx || uh_check(nx, q, end) < 0.0 {
                continue;
            }
            cand[kept] = q;
            if best.is_none_or(|b| q.lex_cmp(&cand[b]) == Ordering::Less) {
                best = Some(kept);
            }
            kept += 1;
        }
        cand.truncate(kept);
        match best {
            Some(b) => next = b,
            None => break,
        }
    }

    for p in &mut chain {
        *p = p.reflect(sx, sy);
    }
    if quarter.is_right() {
        chain.reverse();
    }
    chain
}

/// Joins two quarter chains that share an anchor.
fn join(mut left: Vec<Point2>, right: Vec<Point2>) -> Vec<Point2> {
    let skip = usize::from(left.last() == right.first());
    left.extend_from_slice(&right[skip..]);
    left
}

pub fn candidate_elimination_convex_hull(points: &[Point2], counter: &mut ReadCounter) -> Result<Hull, GeometryError> {
    check_finite(points)?;
    let ex = find_extremes(points, counter)?;
    let cands = initial_candidate_elimination(points, &ex, counter);
    let [ul, ur, ll, lr] = QuarterKind::ALL.map(|q| find_quarter_hull(&cands[q], q, q.anchors(&ex), counter));
    finish_hull(join(ul, ur), join(ll, lr))
}
