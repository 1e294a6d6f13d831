//! Expected-linear-time planar convex hulls and the DataGrinder classifier,
//! which votes over per-class convex hulls of every feature-pair projection.

pub mod classifier;
pub mod datagen;
pub mod geometry;
pub mod parallel;

pub use geometry::{GeometryError, Hull, HullAlgorithm, Point2, ReadCounter};
