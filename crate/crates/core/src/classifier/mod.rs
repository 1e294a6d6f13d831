//! DataGrinder: one convex hull per (class, feature pair), voting by
//! containment, with nearest-neighbour fallback and accuracy-based pruning.

mod dataset;
mod model;
mod nn;
mod normalize;
mod tuning;

pub use dataset::Dataset;
pub use model::{aspect_contains, DataGrinderModel, ScoreVector, TwoDAspect};
pub use nn::nn_baseline;
pub use normalize::MinMaxScaler;
pub use tuning::{sweep_theta, theta_grid, ThetaSweep};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("at least two features are required, got {0}")]
    TooFewFeatures(usize),
    #[error("dataset has no rows")]
    EmptyDataset,
    #[error("{values} feature values do not fill {rows} rows of {features} features")]
    Shape {
        values: usize,
        rows: usize,
        features: usize,
    },
    #[error("row {row} has {found} values, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("non-finite value at row {row}, feature {feature}")]
    NonFinite { row: usize, feature: usize },
    #[error("label {label} out of range for {class_count} classes")]
    LabelOutOfRange { label: usize, class_count: usize },
    #[error("class {0} has no training rows")]
    EmptyClass(usize),
    #[error("model expects {expected} features, data has {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("aspect accuracies have not been evaluated")]
    MissingAccuracy,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("model file: {0}")]
    Persist(#[from] serde_json::Error),
}
