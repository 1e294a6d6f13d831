//! Planar convex hulls: a brute-force reference, the sorted scan, and
//! candidate elimination, all producing the same canonical [`Hull`].

mod classic;
mod counter;
mod elimination;
mod hull;
mod naive;
mod point;

pub use classic::{classic_convex_hull, find_lower_hull, find_upper_hull};
pub use counter::ReadCounter;
pub use elimination::{
    candidate_elimination_convex_hull, find_extremes, find_quarter_hull, initial_candidate_elimination, Extremes,
    QuarterCandidates, QuarterKind,
};
pub use hull::{canonicalize_hull, point_in_hull, Hull};
pub use naive::naive_convex_hull;
pub use point::{sort_points, uh_check, Point2};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("empty point set")]
    EmptyInput,
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    /// Fewer than three distinct points, or all points collinear. `chain`
    /// holds the surviving point or segment endpoints.
    #[error("degenerate hull with {} distinct vertices", chain.len())]
    Degenerate { chain: Vec<Point2> },
    #[error("cannot split {n} points into {k} partitions")]
    InvalidPartition { k: usize, n: usize },
}

/// Which hull routine to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullAlgorithm {
    Naive,
    Classic,
    CandidateElimination,
}

impl HullAlgorithm {
    pub fn run(self, points: &[Point2], counter: &mut ReadCounter) -> Result<Hull, GeometryError> {
        match self {
            HullAlgorithm::Naive => naive_convex_hull(points),
            HullAlgorithm::Classic => classic_convex_hull(points, counter),
            HullAlgorithm::CandidateElimination => candidate_elimination_convex_hull(points, counter),
        }
    }
}
