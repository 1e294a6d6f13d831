use rayon::prelude::*;

use super::model::ScoreVector;
use super::nn::nearest_row;
use super::{ClassifierError, DataGrinderModel, Dataset};

/// `{0, step, 2*step, ..., 1}` with the grid built from integer indices so
/// the endpoints are exact.
pub fn theta_grid(step: f64) -> Result<Vec<f64>, ClassifierError> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(ClassifierError::InvalidConfig(format!(
            "theta step must lie in (0, 1], got {step}"
        )));
    }
    let steps = (1.0 / step).round().max(1.0) as usize;
    Ok((0..=steps).map(|i| i as f64 / steps as f64).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSweep {
    /// `(theta, test accuracy)` for every grid point.
    pub curve: Vec<(f64, f64)>,
    /// Surviving aspect count at every grid point.
    pub aspects: Vec<usize>,
    /// Grid point with the highest accuracy, smallest theta on ties.
    pub best: (f64, f64),
}

/// Trains once on `train`, then measures test accuracy after filtering at
/// every theta of the grid.
pub fn sweep_theta(train: &Dataset, test: &Dataset, step: f64, normalize: bool) -> Result<ThetaSweep, ClassifierError> {
    let grid = theta_grid(step)?;
    if test.feature_count() != train.feature_count() {
        return Err(ClassifierError::DimensionMismatch {
            expected: train.feature_count(),
            found: test.feature_count(),
        });
    }
    let model = DataGrinderModel::train(train, normalize)?.evaluate_aspects(train);
    let accuracies: Vec<f64> = model.aspects.iter().map(|a| a.train_accuracy.unwrap_or(0.0)).collect();

    // containment matrix and fallback label per test row, shared by all thetas
    let per_row: Vec<(Vec<bool>, usize)> = test
        .rows()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|r| {
            let row = model.prepare(r);
            let inside = model.aspects.iter().map(|a| a.contains(&row)).collect();
            (inside, model.reference.label(nearest_row(&model.reference, &row)))
        })
        .collect();

    let mut curve = Vec::with_capacity(grid.len());
    let mut aspects = Vec::with_capacity(grid.len());
    for &theta in &grid {
        let keep: Vec<bool> = accuracies.iter().map(|&acc| theta < 1.0 && acc >= theta).collect();
        let surviving = keep.iter().filter(|&&k| k).count();
        let any = surviving > 0;
        aspects.push(surviving);
        let mut correct = 0;
        for ((inside, fallback), &label) in per_row.iter().zip(test.labels()) {
            let predicted = if !any {
                0
            } else {
                let mut counts = vec![0; model.class_count];
                for (a, (&k, &c)) in model.aspects.iter().zip(keep.iter().zip(inside)) {
                    if k && c {
                        counts[a.class_label] += 1;
                    }
                }
                ScoreVector { counts }.argmax().unwrap_or(*fallback)
            };
            if predicted == label {
                correct += 1;
            }
        }
        curve.push((theta, correct as f64 / test.len() as f64));
    }
    let best = curve
        .iter()
        .copied()
        .fold(curve[0], |b, p| if p.1 > b.1 { p } else { b });
    Ok(ThetaSweep { curve, aspects, best })
}
