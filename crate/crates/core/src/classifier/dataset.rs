use serde::{Deserialize, Serialize};

use super::ClassifierError;

/// Row-major `n x d` feature matrix with one dense class id per row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    features: Vec<f64>,
    labels: Vec<usize>,
    class_count: usize,
    feature_count: usize,
}

impl Dataset {
    pub fn new(
        features: Vec<f64>,
        labels: Vec<usize>,
        class_count: usize,
        feature_count: usize,
    ) -> Result<Self, ClassifierError> {
        if feature_count < 2 {
            return Err(ClassifierError::TooFewFeatures(feature_count));
        }
        if labels.is_empty() {
            return Err(ClassifierError::EmptyDataset);
        }
        if features.len() != labels.len() * feature_count {
            return Err(ClassifierError::Shape {
                values: features.len(),
                rows: labels.len(),
                features: feature_count,
            });
        }
        if let Some(i) = features.iter().position(|v| !v.is_finite()) {
            return Err(ClassifierError::NonFinite {
                row: i / feature_count,
                feature: i % feature_count,
            });
        }
        if let Some(&label) = labels.iter().find(|&&l| l >= class_count) {
            return Err(ClassifierError::LabelOutOfRange { label, class_count });
        }
        Ok(Dataset {
            features,
            labels,
            class_count,
            feature_count,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>], labels: Vec<usize>, class_count: usize) -> Result<Self, ClassifierError> {
        let d = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != d) {
            return Err(ClassifierError::RowLength {
                row: bad,
                expected: d,
                found: rows[bad].len(),
            });
        }
        Self::new(rows.concat(), labels, class_count, d)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn feature_count(&self) -> usize {
        self.feature_count
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.features[i * self.feature_count..(i + 1) * self.feature_count]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.features.chunks_exact(self.feature_count)
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// Rows at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        let mut features = Vec::with_capacity(indices.len() * self.feature_count);
        for &i in indices {
            features.extend_from_slice(self.row(i));
        }
        Dataset {
            features,
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_count: self.class_count,
            feature_count: self.feature_count,
        }
    }

    pub(crate) fn map_rows(&self, f: impl Fn(&[f64]) -> Vec<f64>) -> Dataset {
        Dataset {
            features: self.rows().flat_map(f).collect(),
            labels: self.labels.clone(),
            class_count: self.class_count,
            feature_count: self.feature_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_shape_and_labels() {
        assert!(matches!(
            Dataset::new(vec![1.0, 2.0], vec![0], 1, 1),
            Err(ClassifierError::TooFewFeatures(1))
        ));
        assert!(matches!(
            Dataset::new(vec![1.0, 2.0, 3.0], vec![0], 1, 2),
            Err(ClassifierError::Shape { .. })
        ));
        assert!(matches!(
            Dataset::new(vec![1.0, 2.0], vec![2], 2, 2),
            Err(ClassifierError::LabelOutOfRange {
                label: 2,
                class_count: 2
            })
        ));
        assert!(matches!(
            Dataset::new(vec![1.0, f64::INFINITY], vec![0], 1, 2),
            Err(ClassifierError::NonFinite { row: 0, feature: 1 })
        ));
    }

    #[test]
    fn subset_and_rows() {
        let ds = Dataset::from_rows(&[vec![0.0, 1.0], vec![2.0, 3.0], vec![4.0, 5.0]], vec![0, 1, 0], 2).unwrap();
        assert_eq!(ds.row(1), &[2.0, 3.0]);
        assert_eq!(ds.class_sizes(), vec![2, 1]);
        let sub = ds.subset(&[2, 0]);
        assert_eq!(sub.row(0), &[4.0, 5.0]);
        assert_eq!(sub.labels(), &[0, 0]);
    }
}
