use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::nn::nearest_row;
use super::normalize::MinMaxScaler;
use super::{ClassifierError, Dataset};
use crate::geometry::{candidate_elimination_convex_hull, point_in_hull, GeometryError, Hull, Point2, ReadCounter};

/// Convex hull of one class projected onto the feature pair `(f1, f2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoDAspect {
    pub class_label: usize,
    pub f1: usize,
    pub f2: usize,
    #[serde(flatten)]
    pub hull: Hull,
    /// Share of all training rows that fall inside and carry `class_label`.
    pub train_accuracy: Option<f64>,
}

impl TwoDAspect {
    pub fn upper_hull(&self) -> &[Point2] {
        &self.hull.upper
    }

    pub fn lower_hull(&self) -> &[Point2] {
        &self.hull.lower
    }

    pub fn contains(&self, row: &[f64]) -> bool {
        point_in_hull(&self.hull, Point2::new(row[self.f1], row[self.f2]))
    }
}

pub fn aspect_contains(aspect: &TwoDAspect, row: &[f64]) -> bool {
    aspect.contains(row)
}

/// Containment votes per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreVector {
    pub counts: Vec<usize>,
}

impl ScoreVector {
    /// Highest-scoring class, smallest id on ties. `None` when every count is 0.
    pub fn argmax(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (c, &n) in self.counts.iter().enumerate() {
            if n > 0 && best.is_none_or(|b| n > self.counts[b]) {
                best = Some(c);
            }
        }
        best
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DataGrinderModel {
    pub class_count: usize,
    pub feature_count: usize,
    /// Filtering ratio last applied; 0 for an unfiltered model.
    pub theta: f64,
    pub normalization: Option<MinMaxScaler>,
    /// Display names for class ids; empty when the labels were numeric ids.
    #[serde(default)]
    pub class_names: Vec<String>,
    pub aspects: Vec<TwoDAspect>,
    /// Training rows (after normalization) for the nearest-neighbour fallback.
    pub reference: Dataset,
}

/// All unordered feature pairs `(f1, f2)` with `f1 < f2`.
pub(crate) fn feature_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect()
}

fn project_hull(points: &[Point2]) -> Hull {
    let mut counter = ReadCounter::new();
    match candidate_elimination_convex_hull(points, &mut counter) {
        Ok(h) => h,
        Err(GeometryError::Degenerate { chain }) => Hull::degenerate(chain),
        Err(e) => unreachable!("training rows are validated finite and non-empty: {e}"),
    }
}

impl DataGrinderModel {
    /// Builds one aspect per class and feature pair. With `normalize`, a
    /// min-max scaler is fit on `data` and stored with the model.
    pub fn train(data: &Dataset, normalize: bool) -> Result<Self, ClassifierError> {
        let d = data.feature_count();
        if d < 2 {
            return Err(ClassifierError::TooFewFeatures(d));
        }
        if let Some(c) = data.class_sizes().iter().position(|&n| n == 0) {
            return Err(ClassifierError::EmptyClass(c));
        }
        let normalization = normalize.then(|| MinMaxScaler::fit(data));
        let reference = match &normalization {
            Some(s) => s.transform_dataset(data),
            None => data.clone(),
        };

        let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); data.class_count()];
        for (i, &l) in reference.labels().iter().enumerate() {
            by_class[l].push(i);
        }
        let pairs = feature_pairs(d);
        let jobs: Vec<(usize, (usize, usize))> = (0..data.class_count())
            .flat_map(|c| pairs.iter().map(move |&p| (c, p)))
            .collect();
        let aspects = jobs
            .par_iter()
            .map(|&(class_label, (f1, f2))| {
                let points: Vec<Point2> = by_class[class_label]
                    .iter()
                    .map(|&i| {
                        let r = reference.row(i);
                        Point2::new(r[f1], r[f2])
                    })
                    .collect();
                TwoDAspect {
                    class_label,
                    f1,
                    f2,
                    hull: project_hull(&points),
                    train_accuracy: None,
                }
            })
            .collect();

        Ok(DataGrinderModel {
            class_count: data.class_count(),
            feature_count: d,
            theta: 0.0,
            normalization,
            class_names: Vec::new(),
            aspects,
            reference,
        })
    }

    pub(crate) fn prepare(&self, row: &[f64]) -> Vec<f64> {
        match &self.normalization {
            Some(s) => s.transform(row),
            None => row.to_vec(),
        }
    }

    pub fn check_row(&self, row: &[f64]) -> Result<(), ClassifierError> {
        if row.len() != self.feature_count {
            return Err(ClassifierError::DimensionMismatch {
                expected: self.feature_count,
                found: row.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn score_prepared(&self, row: &[f64]) -> ScoreVector {
        let mut counts = vec![0; self.class_count];
        for a in &self.aspects {
            if a.contains(row) {
                counts[a.class_label] += 1;
            }
        }
        ScoreVector { counts }
    }

    pub fn score(&self, row: &[f64]) -> ScoreVector {
        self.score_prepared(&self.prepare(row))
    }

    /// Predicted class id.
    ///
    /// A model with no aspects left predicts class 0. Otherwise the top
    /// scoring class wins; a row outside every aspect takes the label of the
    /// nearest training row.
    pub fn classify(&self, row: &[f64]) -> usize {
        if self.aspects.is_empty() {
            return 0;
        }
        let row = self.prepare(row);
        match self.score_prepared(&row).argmax() {
            Some(c) => c,
            None => self.reference.label(nearest_row(&self.reference, &row)),
        }
    }

    pub fn classify_all(&self, data: &Dataset) -> Vec<usize> {
        data.rows().map(|r| self.classify(r)).collect()
    }

    pub fn accuracy(&self, data: &Dataset) -> f64 {
        let correct = data
            .rows()
            .zip(data.labels())
            .filter(|(r, &l)| self.classify(r) == l)
            .count();
        correct as f64 / data.len() as f64
    }

    /// Fills every aspect's training accuracy: rows of the aspect's class
    /// that fall inside it, over all `n` rows of `train`.
    pub fn evaluate_aspects(mut self, train: &Dataset) -> Self {
        let rows: Vec<Vec<f64>> = train.rows().map(|r| self.prepare(r)).collect();
        let n = train.len() as f64;
        let labels = train.labels();
        self.aspects.par_iter_mut().for_each(|a| {
            let hits = rows
                .iter()
                .zip(labels)
                .filter(|(r, &l)| l == a.class_label && a.contains(r))
                .count();
            a.train_accuracy = Some(hits as f64 / n);
        });
        self
    }

    /// Keeps aspects whose training accuracy is at least `theta`. `theta >= 1`
    /// removes every aspect.
    pub fn filter_aspects(mut self, theta: f64) -> Result<Self, ClassifierError> {
        if self.aspects.iter().any(|a| a.train_accuracy.is_none()) {
            return Err(ClassifierError::MissingAccuracy);
        }
        if theta >= 1.0 {
            self.aspects.clear();
        } else {
            self.aspects.retain(|a| a.train_accuracy.unwrap() >= theta);
        }
        self.theta = theta;
        Ok(self)
    }

    pub fn to_json(&self) -> Result<String, ClassifierError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self, ClassifierError> {
        Ok(serde_json::from_str(s)?)
    }
}
