//! Dense complex vectors, orthonormal bases, and basis sets.
//!
//! Everything here is immutable once built. Constructors do not enforce
//! orthonormality (bases read from files may be corrupted); use
//! [`validate_basis_set`] to check it.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A state vector in `ℂ^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> CVector<T> {
    pub fn new(amps: Vec<Complex<T>>) -> Self {
        Self { amps }
    }

    pub fn from_real(values: &[T]) -> Self {
        Self::new(values.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    /// The canonical vector `e_index` in dimension `dim`.
    pub fn canonical(dim: usize, index: usize) -> Self {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Self { amps }
    }

    /// Rescales to unit norm. Returns `None` for the zero vector.
    pub fn normalized(amps: Vec<Complex<T>>) -> Option<Self> {
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
        if norm <= T::epsilon() {
            return None;
        }
        Some(Self::new(amps.into_iter().map(|a| a / norm).collect()))
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_unit(&self, tol: T) -> bool {
        (self.norm_sqr().sqrt() - T::one()).abs() <= tol
    }

    /// Kronecker product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Self { amps }
    }

    /// Number of amplitudes with magnitude at most `tol`.
    pub fn zero_count(&self, tol: T) -> usize {
        self.amps.iter().filter(|a| a.norm() <= tol).count()
    }
}

/// `⟨u|v⟩`, conjugate-linear in `u`.
pub fn inner_product<T: Real>(u: &CVector<T>, v: &CVector<T>) -> Result<Complex<T>> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    Ok(inner_unchecked(u.amplitudes(), v.amplitudes()))
}

#[inline]
pub(crate) fn inner_unchecked<T: Real>(u: &[Complex<T>], v: &[Complex<T>]) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in u.iter().zip(v) {
        acc += a.conj() * b;
    }
    acc
}

/// An orthonormal basis of `ℂ^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis<T> {
    dim: usize,
    vectors: Vec<CVector<T>>,
    label: String,
}

impl<T: Real> Basis<T> {
    /// Builds a basis from exactly `d` vectors of dimension `d`.
    pub fn new(label: impl Into<String>, vectors: Vec<CVector<T>>) -> Result<Self> {
        let dim = vectors.len();
        if dim == 0 {
            return Err(Error::Empty("basis"));
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: v.dim() });
        }
        Ok(Self { dim, vectors, label: label.into() })
    }

    pub fn canonical(dim: usize) -> Self {
        let vectors = (0..dim).map(|i| CVector::canonical(dim, i)).collect();
        Self { dim, vectors, label: "canonical".into() }
    }

    /// Basis whose `j`-th vector is column `j` of the row-major `dim × dim` matrix.
    pub fn from_columns(label: impl Into<String>, dim: usize, entries: &[Complex<T>]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: dim * dim, right: entries.len() });
        }
        let vectors = (0..dim).map(|c| CVector::new((0..dim).map(|r| entries[r * dim + c]).collect())).collect();
        Self::new(label, vectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[CVector<T>] {
        &self.vectors
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Tensor-product basis `{u ⊗ v}` ordered with `self` as the slow index.
    pub fn tensor(&self, other: &Self) -> Self {
        let vectors = self.vectors.iter().flat_map(|u| other.vectors.iter().map(move |v| u.tensor(v))).collect();
        Self { dim: self.dim * other.dim, vectors, label: format!("{}⊗{}", self.label, other.label) }
    }

    /// Largest `|‖v‖² − 1|` over member vectors.
    pub fn norm_residual(&self) -> T {
        self.vectors.iter().map(|v| (v.norm_sqr() - T::one()).abs()).fold(T::zero(), T::max)
    }

    /// Largest `|⟨v_i|v_j⟩|` over distinct members.
    pub fn orthogonality_residual(&self) -> T {
        let mut worst = T::zero();
        for (i, u) in self.vectors.iter().enumerate() {
            for v in &self.vectors[i + 1..] {
                worst = worst.max(inner_unchecked(u.amplitudes(), v.amplitudes()).norm());
            }
        }
        worst
    }
}

/// A family `{M_1, …, M_r}` of bases of a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisSet<T> {
    dim: usize,
    bases: Vec<Basis<T>>,
    provenance: String,
}

impl<T: Real> BasisSet<T> {
    pub fn new(provenance: impl Into<String>, bases: Vec<Basis<T>>) -> Result<Self> {
        let first = bases.first().ok_or(Error::Empty("basis set"))?;
        let dim = first.dim();
        if let Some(b) = bases.iter().find(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: b.dim() });
        }
        Ok(Self { dim, bases, provenance: provenance.into() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[Basis<T>] {
        &self.bases
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Keeps only the first `r` bases.
    pub fn truncated(&self, r: usize) -> Result<Self> {
        let r = r.min(self.len());
        Self::new(format!("{}[..{r}]", self.provenance), self.bases[..r].to_vec())
    }

    /// All member vectors, basis-major.
    pub fn all_vectors(&self) -> Vec<CVector<T>> {
        self.bases.iter().flat_map(|b| b.vectors().iter().cloned()).collect()
    }

    /// Unordered index pairs `(l, m)` with `l < m`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let r = self.len();
        (0..r).flat_map(|l| (l + 1..r).map(move |m| (l, m))).collect()
    }
}

/// `d × d` table of overlap magnitudes `|⟨ψ_i|φ_j⟩|`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapTable<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Real> OverlapTable<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> T {
        self.data[row * self.dim + col]
    }

    pub fn values(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut data = vec![T::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                data[j * d + i] = self.data[i * d + j];
            }
        }
        Self { dim: d, data }
    }

    /// `Σ_j entry(i,j)²` for each row.
    pub fn row_square_sums(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.row(i).iter().map(|&x| x * x).sum()).collect()
    }

    pub fn column_square_sums(&self) -> Vec<T> {
        (0..self.dim).map(|j| (0..self.dim).map(|i| self.get(i, j).powi(2)).sum()).collect()
    }

    pub fn max(&self) -> T {
        self.data.iter().copied().fold(T::zero(), T::max)
    }
}

/// Overlap magnitudes between two bases of equal dimension.
pub fn overlap_table<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<OverlapTable<T>> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch { left: b1.dim(), right: b2.dim() });
    }
    let d = b1.dim();
    let mut data = Vec::with_capacity(d * d);
    for u in b1.vectors() {
        for v in b2.vectors() {
            data.push(inner_unchecked(u.amplitudes(), v.amplitudes()).norm());
        }
    }
    Ok(OverlapTable { dim: d, data })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisResidual<T> {
    pub label: String,
    pub norm: T,
    pub orthogonality: T,
}

impl<T: Real> BasisResidual<T> {
    pub fn max(&self) -> T {
        self.norm.max(self.orthogonality)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport<T> {
    pub tol: T,
    pub per_basis: Vec<BasisResidual<T>>,
    pub max_residual: T,
    pub passed: bool,
}

/// Orthonormality residuals of every basis in the set.
pub fn validate_basis_set<T: Real>(set: &BasisSet<T>, tol: T) -> ValidationReport<T> {
    let per_basis: Vec<_> = set
        .bases()
        .iter()
        .map(|b| BasisResidual {
            label: b.label().to_string(),
            norm: b.norm_residual(),
            orthogonality: b.orthogonality_residual(),
        })
        .collect();
    let max_residual = per_basis.iter().map(BasisResidual::max).fold(T::zero(), T::max);
    ValidationReport { tol, passed: max_residual <= tol, max_residual, per_basis }
}

/// Haar-random pure state.
pub fn random_state<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CVector<T> {
    loop {
        let amps = gaussian_vector(dim, rng);
        if let Some(v) = CVector::normalized(amps) {
            return v;
        }
    }
}

/// Haar-random orthonormal basis via Gram–Schmidt on Gaussian columns.
pub fn random_basis<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Basis<T> {
    let mut vectors: Vec<CVector<T>> = Vec::with_capacity(dim);
    while vectors.len() < dim {
        let mut amps = gaussian_vector::<T, R>(dim, rng);
        // two passes of modified Gram–Schmidt keep the residual at machine precision
        for _ in 0..2 {
            for q in &vectors {
                let c = inner_unchecked(q.amplitudes(), &amps);
                for (a, b) in amps.iter_mut().zip(q.amplitudes()) {
                    *a -= b * c;
                }
            }
        }
        if let Some(v) = CVector::normalized(amps) {
            if v.norm_sqr() > T::zero() {
                vectors.push(v);
            }
        }
    }
    Basis { dim, vectors, label: "random".into() }
}

fn gaussian_vector<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex<T>> {
    (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(T::lit(re), T::lit(im))
        })
        .collect()
}
