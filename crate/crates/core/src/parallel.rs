//! Divide-and-conquer hull: hull every partition independently, then hull the
//! union of the partition hull vertices. The hull of the whole set is a subset
//! of that union, so the final pass is exact for any partitioning.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geometry::{candidate_elimination_convex_hull, GeometryError, Hull, Point2, ReadCounter};

/// Assignment of point indices to `k` partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPlan {
    k: usize,
    assignment: Vec<usize>,
}

impl PartitionPlan {
    /// Point `i` goes to partition `i mod k`.
    pub fn round_robin(n: usize, k: usize) -> Result<Self, GeometryError> {
        Self::check(n, k)?;
        Ok(PartitionPlan {
            k,
            assignment: (0..n).map(|i| i % k).collect(),
        })
    }

    /// Round-robin over a seeded random permutation of the indices.
    pub fn shuffled(n: usize, k: usize, seed: u64) -> Result<Self, GeometryError> {
        Self::check(n, k)?;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut assignment = vec![0; n];
        for (slot, &i) in order.iter().enumerate() {
            assignment[i] = slot % k;
        }
        Ok(PartitionPlan { k, assignment })
    }

    fn check(n: usize, k: usize) -> Result<(), GeometryError> {
        if k == 0 || k > n {
            return Err(GeometryError::InvalidPartition { k, n });
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, points: &[Point2]) -> Vec<Vec<Point2>> {
        assert_eq!(
            points.len(),
            self.assignment.len(),
            "plan built for a different point count"
        );
        let mut parts = vec![Vec::with_capacity(points.len() / self.k + 1); self.k];
        for (&p, &part) in points.iter().zip(&self.assignment) {
            parts[part].push(p);
        }
        parts
    }
}

pub fn partition_points(points: &[Point2], k: usize) -> Result<Vec<Vec<Point2>>, GeometryError> {
    Ok(PartitionPlan::round_robin(points.len(), k)?.apply(points))
}

/// Result of a divide-and-conquer run.
#[derive(Clone, Debug)]
pub struct DivideConquerOutcome {
    pub hull: Hull,
    /// Size of the merged vertex set the final hull was computed from.
    pub merged_points: usize,
    pub counter: ReadCounter,
}

pub fn divide_conquer_hull(points: &[Point2], k: usize) -> Result<DivideConquerOutcome, GeometryError> {
    let plan = PartitionPlan::round_robin(points.len(), k)?;
    divide_conquer_hull_with_plan(points, &plan)
}

pub fn divide_conquer_hull_with_plan(
    points: &[Point2],
    plan: &PartitionPlan,
) -> Result<DivideConquerOutcome, GeometryError> {
    let mut counter = ReadCounter::new();
    if plan.k() == 1 {
        let hull = candidate_elimination_convex_hull(points, &mut counter)?;
        return Ok(DivideConquerOutcome {
            hull,
            merged_points: points.len(),
            counter,
        });
    }

    let parts = plan.apply(points);
    let partials: Vec<(Vec<Point2>, ReadCounter)> = parts
        .par_iter()
        .map(|part| {
            let mut c = ReadCounter::new();
            match candidate_elimination_convex_hull(part, &mut c) {
                Ok(h) => Ok((h.vertices(), c)),
                // too small or collinear: pass the raw points through
                Err(GeometryError::Degenerate { .. }) => Ok((part.clone(), c)),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_, _>>()?;

    let mut merged = Vec::new();
    for (verts, c) in partials {
        merged.extend(verts);
        counter += c;
    }
    let hull = candidate_elimination_convex_hull(&merged, &mut counter)?;
    Ok(DivideConquerOutcome {
        hull,
        merged_points: merged.len(),
        counter,
    })
}
