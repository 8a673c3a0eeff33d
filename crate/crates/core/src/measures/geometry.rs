//! Bloch-vector picture: each pure state maps to the traceless operator
//! `m = |ψ⟩⟨ψ| − I/d`, with the dot product `m₁·m₂ = ½ Tr(m₁ m₂)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{inner_product, Basis, CVector};
use crate::scalar::Real;

/// Dense `d × d` Hermitian operator `c (|ψ⟩⟨ψ| − I/d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TracelessProjector<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> TracelessProjector<T> {
    /// `|ψ⟩⟨ψ| − I/d`.
    pub fn new(state: &CVector<T>) -> Self {
        Self::scaled(state, T::one())
    }

    /// `√(d/(d−1)) (|ψ⟩⟨ψ| − I/d)`, unit Hilbert–Schmidt norm.
    pub fn normalized(state: &CVector<T>) -> Self {
        let d = T::from_usize_lossy(state.dim());
        Self::scaled(state, (d / (d - T::one())).sqrt())
    }

    fn scaled(state: &CVector<T>, c: T) -> Self {
        let d = state.dim();
        let a = state.amplitudes();
        let inv_d = T::from_usize_lossy(d).recip();
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut e = a[i] * a[j].conj();
                if i == j {
                    e.re -= inv_d;
                }
                entries.push(e * c);
            }
        }
        Self { dim: d, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Tr(A B)`, real for Hermitian operands.
    pub fn trace_product(&self, other: &Self) -> T {
        let d = self.dim;
        let mut acc = T::zero();
        for i in 0..d {
            for k in 0..d {
                acc += (self.entries[i * d + k] * other.entries[k * d + i]).re;
            }
        }
        acc
    }

    /// `½ Tr(A B)`.
    pub fn dot(&self, other: &Self) -> T {
        self.trace_product(other) / T::lit(2.0)
    }
}

/// `m_u · m_v = ½ (|⟨u|v⟩|² − 1/d)` in closed form.
pub fn traceless_dot<T: Real>(u: &CVector<T>, v: &CVector<T>) -> Result<T> {
    let ip = inner_product(u, v)?;
    Ok((ip.norm_sqr() - T::from_usize_lossy(u.dim()).recip()) / T::lit(2.0))
}

/// `m_u · m_v` evaluated as `½ Tr(m_u m_v)` on explicit operators.
pub fn traceless_dot_explicit<T: Real>(u: &CVector<T>, v: &CVector<T>) -> Result<T> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    Ok(TracelessProjector::new(u).dot(&TracelessProjector::new(v)))
}

/// `4 Σ_{i,j} (m_i · m_j)²` on explicit operators; equals `γ²`.
pub fn gamma_squared_geometric<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch { left: b1.dim(), right: b2.dim() });
    }
    let p1: Vec<_> = b1.vectors().iter().map(TracelessProjector::new).collect();
    let p2: Vec<_> = b2.vectors().iter().map(TracelessProjector::new).collect();
    let mut acc = T::zero();
    for a in &p1 {
        for b in &p2 {
            acc += a.dot(b).powi(2);
        }
    }
    Ok(T::lit(4.0) * acc)
}
