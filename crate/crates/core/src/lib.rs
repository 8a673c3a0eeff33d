//! Construction and analysis of mutually unbiased and approximately
//! mutually unbiased bases.
//!
//! All numeric code is generic over [`Real`] (`f32` or `f64`); the type
//! aliases at the crate root fix the scalar to `f64`, with `*F32` variants
//! for single precision.
//!
//! ```
//! use mubkit::{constructors::prime_mubs, measures::asd_set};
//!
//! let set = prime_mubs::<f64>(5).unwrap();
//! assert!((asd_set(&set).unwrap() - 1.0).abs() < 1e-12);
//! ```

pub mod algebra;
pub mod apps;
pub mod constructors;
pub mod designs;
pub mod error;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type CVector = linalg::CVector<f64>;
pub type Basis = linalg::Basis<f64>;
pub type BasisSet = linalg::BasisSet<f64>;
pub type OverlapTable = linalg::OverlapTable<f64>;
pub type FlatMatrix = algebra::FlatMatrix<f64>;
pub type ConstructionResult = constructors::ConstructionResult<f64>;
pub type Classification = constructors::Classification<f64>;
pub type MeasureReport = measures::MeasureReport<f64>;

pub type CVectorF32 = linalg::CVector<f32>;
pub type BasisF32 = linalg::Basis<f32>;
pub type BasisSetF32 = linalg::BasisSet<f32>;
pub type OverlapTableF32 = linalg::OverlapTable<f32>;
pub type FlatMatrixF32 = algebra::FlatMatrix<f32>;
pub type ConstructionResultF32 = constructors::ConstructionResult<f32>;
pub type ClassificationF32 = constructors::Classification<f32>;
pub type MeasureReportF32 = measures::MeasureReport<f32>;
