//! Frame potentials and the projective-design test.

use crate::error::{Error, Result};
use crate::linalg::{inner_unchecked, CVector};
use crate::scalar::Real;

/// `Φ_t = (1/N²) Σ_{j,k} |⟨ψ_j|ψ_k⟩|^{2t}` over all ordered pairs, self-pairs included.
pub fn frame_potential<T: Real>(vectors: &[CVector<T>], t: u32) -> Result<T> {
    let first = vectors.first().ok_or(Error::Empty("frame potential needs at least one vector"))?;
    let d = first.dim();
    if let Some(bad) = vectors.iter().find(|v| v.dim() != d) {
        return Err(Error::DimensionMismatch { left: d, right: bad.dim() });
    }
    let t = i32::try_from(t).map_err(|_| Error::InvalidParameters(format!("t={t} too large")))?;
    let n = vectors.len();
    let mut off = T::zero();
    let mut diag = T::zero();
    for (j, u) in vectors.iter().enumerate() {
        diag += u.norm_sqr().powi(t);
        for v in &vectors[j + 1..] {
            off += inner_unchecked(u.amplitudes(), v.amplitudes()).norm_sqr().powi(t);
        }
    }
    let nf = T::from_usize_lossy(n);
    Ok((diag + T::lit(2.0) * off) / (nf * nf))
}

/// Dimension `C(d+t−1, t)` of the symmetric subspace of `(ℂ^d)^{⊗t}`.
pub fn sym_dim(d: usize, t: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidParameters("dimension must be positive".into()));
    }
    let n = (d + t - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..t as u128 {
        acc =
            acc.checked_mul(n - i).ok_or_else(|| Error::InvalidParameters(format!("C({n}, {t}) overflows")))? / (i + 1);
    }
    Ok(acc)
}

/// Frame potential together with its Welch bound.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DesignDefect<T> {
    pub t: u32,
    pub potential: T,
    pub sym_dim: u128,
    /// `Φ_t − 1/sym_dim`; non-negative, zero exactly for projective t-designs.
    pub defect: T,
    /// `Φ_t · sym_dim`; equals 1 for a projective t-design.
    pub ratio: T,
}

pub fn design_defect<T: Real>(vectors: &[CVector<T>], t: u32) -> Result<DesignDefect<T>> {
    let potential = frame_potential(vectors, t)?;
    let sd = sym_dim(vectors[0].dim(), t as usize)?;
    let sdf = T::from_u128(sd).ok_or_else(|| Error::InvalidParameters("sym_dim not representable".into()))?;
    Ok(DesignDefect { t, potential, sym_dim: sd, defect: potential - sdf.recip(), ratio: potential * sdf })
}
