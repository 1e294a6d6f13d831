use serde::{Deserialize, Serialize};

use super::Dataset;

/// Per-feature min-max scaling to `[0, 1]`, fit on training rows only.
/// Constant features map to 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinMaxScaler {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl MinMaxScaler {
    pub fn fit(data: &Dataset) -> Self {
        let d = data.feature_count();
        let mut min = vec![f64::INFINITY; d];
        let mut max = vec![f64::NEG_INFINITY; d];
        for row in data.rows() {
            for (j, &v) in row.iter().enumerate() {
                min[j] = min[j].min(v);
                max[j] = max[j].max(v);
            }
        }
        MinMaxScaler { min, max }
    }

    pub fn transform(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(self.min.iter().zip(&self.max))
            .map(|(&v, (&lo, &hi))| if hi > lo { (v - lo) / (hi - lo) } else { 0.0 })
            .collect()
    }

    pub fn transform_dataset(&self, data: &Dataset) -> Dataset {
        data.map_rows(|r| self.transform(r))
    }
}
