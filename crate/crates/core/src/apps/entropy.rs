//! Shannon entropy of measurement outcomes and the Maassen–Uffink bound.

use crate::error::{Error, Result};
use crate::linalg::{overlap_table, Basis, CVector};
use crate::scalar::Real;

/// Entropy in bits of `p_i = |⟨ψ_i|state⟩|²`, with `0 log 0 = 0`.
pub fn outcome_entropy<T: Real>(state: &CVector<T>, basis: &Basis<T>) -> Result<T> {
    if state.dim() != basis.dim() {
        return Err(Error::DimensionMismatch { left: state.dim(), right: basis.dim() });
    }
    let mut h = T::zero();
    for v in basis.vectors() {
        let p = crate::linalg::inner_unchecked(v.amplitudes(), state.amplitudes()).norm_sqr();
        if p > T::zero() {
            h -= p * p.log2();
        }
    }
    Ok(h)
}

/// `−log₂ max_{i,j} |⟨ψ_i|φ_j⟩|`, a lower bound on the average outcome entropy.
pub fn maassen_uffink_bound<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    Ok(-overlap_table(b1, b2)?.max().log2())
}
