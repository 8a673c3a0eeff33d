//! Closeness measures between bases and basis sets.

pub mod frame;
pub mod geometry;
pub mod pair;
pub mod report;
pub mod volume;

pub use frame::{design_defect, frame_potential, sym_dim, DesignDefect};
pub use geometry::{gamma_squared_geometric, traceless_dot, traceless_dot_explicit, TracelessProjector};
pub use pair::*;
pub use report::{measure_set, MeasureOptions, MeasureReport, PairMeasures, TValue, VolumeTerms};
pub use volume::{gram_log_volume, gram_matrix, log_volume_ratio_approx, GramMatrix};
