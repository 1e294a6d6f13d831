mod evaluate;
mod geometry;
mod model;

pub use evaluate::{cv, experiment};
pub use geometry::{bench, hull};
pub use model::{gen, load_model, predict, train};
