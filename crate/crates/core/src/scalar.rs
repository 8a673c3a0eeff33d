//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All vector, basis and measure code is written against [`Real`], which is
//! implemented for `f32` and `f64`. Default tolerances are per-type: the
//! `f64` values are the ones the acceptance thresholds are stated in.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point scalar usable as the real part of basis amplitudes.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + serde::Serialize
    + serde::de::DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance for orthonormality and identity checks.
    const DEFAULT_TOL: f64;
    /// Clustering tolerance for overlap spectra.
    const CLUSTER_TOL: f64;
    /// Threshold below which an amplitude counts as zero for sparsity.
    const ZERO_TOL: f64;

    /// Converts an `f64` literal. Never fails for finite input.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize fits in a float")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn default_tol() -> Self {
        Self::lit(Self::DEFAULT_TOL)
    }

    fn cluster_tol() -> Self {
        Self::lit(Self::CLUSTER_TOL)
    }

    fn zero_tol() -> Self {
        Self::lit(Self::ZERO_TOL)
    }
}

impl Real for f64 {
    const DEFAULT_TOL: f64 = 1e-9;
    const CLUSTER_TOL: f64 = 1e-7;
    const ZERO_TOL: f64 = 1e-9;
}

impl Real for f32 {
    const DEFAULT_TOL: f64 = 1e-4;
    const CLUSTER_TOL: f64 = 1e-3;
    const ZERO_TOL: f64 = 1e-5;
}

/// Complex amplitude over a [`Real`] scalar.
pub type Amplitude<T> = Complex<T>;

/// `e^{iθ}`.
#[inline]
pub fn unit_phase<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}
