//! Univariate medians and MADs, projection outlyingness and halfspace depth.

mod directions;
mod halfspace;
mod outlyingness;
mod univariate;

pub use directions::{data_directions, random_directions, DirectionBudget};
pub use halfspace::{tukey_depth, DepthMode};
pub use outlyingness::{outlyingness, ProjectionProfile};
pub use univariate::{mad, univariate_median, MedianInterval};
