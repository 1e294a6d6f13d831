use super::Dataset;

pub(crate) fn nearest_row(train: &Dataset, row: &[f64]) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, r) in train.rows().enumerate() {
        let d: f64 = r.iter().zip(row).map(|(a, b)| (a - b) * (a - b)).sum();
        if d < best_d {
            best_d = d;
            best = i;
        }
    }
    best
}

/// Label of the Euclidean-nearest training row; the first row wins ties.
pub fn nn_baseline(train: &Dataset, row: &[f64]) -> usize {
    train.label(nearest_row(train, row))
}
