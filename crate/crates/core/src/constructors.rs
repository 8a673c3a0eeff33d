//! Basis-set constructions: prime-dimension MUBs, weak MUBs, and bases laid
//! out on resolvable designs.

use std::fmt;

use num_complex::Complex;
use serde::Serialize;

use crate::algebra::{flat_matrix_for, is_prime, FlatKind, FlatMatrix, HadamardMode};
use crate::designs::{intersection_profile, ResolvableDesign};
use crate::error::{Error, Result};
use crate::linalg::{Basis, BasisSet, CVector};
use crate::measures::delta_spectrum;
use crate::scalar::{unit_phase, Real};

/// Complete set of `p + 1` MUBs in `ℂ^p` for a prime `p`.
///
/// For odd `p` the bases are the computational basis and
/// `|a, b⟩ = p^{-1/2} Σ_x ω^{a x² + b x} |x⟩` for `a ∈ ℤ_p`. For `p = 2` the
/// three Pauli eigenbases are returned.
pub fn prime_mubs<T: Real>(p: usize) -> Result<BasisSet<T>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let s = T::one() / T::from_usize_lossy(p).sqrt();
    let c = |re: T, im: T| Complex::new(re, im);
    let zero = T::zero();
    if p == 2 {
        let x = vec![CVector::new(vec![c(s, zero), c(s, zero)]), CVector::new(vec![c(s, zero), c(-s, zero)])];
        let y = vec![CVector::new(vec![c(s, zero), c(zero, s)]), CVector::new(vec![c(s, zero), c(zero, -s)])];
        return BasisSet::new(
            "mub-prime(p=2)",
            vec![Basis::canonical(2).with_label("Z"), Basis::new("X", x)?, Basis::new("Y", y)?],
        );
    }
    let step = T::TAU() / T::from_usize_lossy(p);
    let mut bases = vec![Basis::canonical(p).with_label("computational")];
    for a in 0..p {
        let vectors = (0..p)
            .map(|b| {
                CVector::new(
                    (0..p)
                        .map(|x| {
                            let e = (a * x % p * x + b * x) % p;
                            unit_phase(step * T::from_usize_lossy(e)) * s
                        })
                        .collect(),
                )
            })
            .collect();
        bases.push(Basis::new(format!("quadratic(a={a})"), vectors)?);
    }
    BasisSet::new(format!("mub-prime(p={p})"), bases)
}

/// Weak MUBs `{M_i ⊗ N_j}` in dimension `p·q` from the prime MUB sets of `p` and `q`.
pub fn weak_mubs<T: Real>(p: usize, q: usize) -> Result<BasisSet<T>> {
    if p == q {
        return Err(Error::InvalidParameters(format!("weak MUBs need distinct primes, got p = q = {p}")));
    }
    let left = prime_mubs::<T>(p)?;
    let right = prime_mubs::<T>(q)?;
    let bases = left
        .bases()
        .iter()
        .enumerate()
        .flat_map(|(i, m)| {
            right.bases().iter().enumerate().map(move |(j, n)| m.tensor(n).with_label(format!("M{i}⊗N{j}")))
        })
        .collect();
    BasisSet::new(format!("weak(p={p},q={q})"), bases)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult<T> {
    pub basis_set: BasisSet<T>,
    /// `μ √(s/k)`.
    pub predicted_beta: T,
    /// Overlap magnitudes the design admits, ascending.
    pub predicted_delta: Vec<T>,
    pub is_real: bool,
    pub flat_kind: FlatKind,
    pub block_size: usize,
    pub blocks_per_class: usize,
    pub mu: usize,
}

/// One orthonormal basis per parallel class, with block vectors read off a flat matrix.
///
/// Every block of size `k` contributes `k` vectors supported on its points:
/// the `c`-th vector carries column `c` of the order-`k` flat matrix, rows
/// matched to the block's points in ascending order. The same matrix is used
/// for every block.
pub fn rbd_to_bases<T: Real>(design: &ResolvableDesign, mode: HadamardMode) -> Result<ConstructionResult<T>> {
    let k = design.block_size().ok_or(Error::NonConstantBlockSize)?;
    rbd_to_bases_with(design, &flat_matrix_for::<T>(k, mode)?)
}

/// [`rbd_to_bases`] with a caller-supplied flat matrix whose order equals the block size.
pub fn rbd_to_bases_with<T: Real>(design: &ResolvableDesign, flat: &FlatMatrix<T>) -> Result<ConstructionResult<T>> {
    let k = design.block_size().ok_or(Error::NonConstantBlockSize)?;
    if flat.order() != k {
        return Err(Error::DimensionMismatch { left: k, right: flat.order() });
    }
    let d = design.point_count();
    let zero = Complex::new(T::zero(), T::zero());

    let bases = design
        .classes()
        .iter()
        .enumerate()
        .map(|(ci, class)| {
            let vectors = class
                .iter()
                .flat_map(|block| {
                    (0..k).map(move |c| {
                        let mut amps = vec![zero; d];
                        for (row, &point) in block.iter().enumerate() {
                            amps[point] = flat.entry(row, c);
                        }
                        CVector::new(amps)
                    })
                })
                .collect();
            Basis::new(format!("class-{ci}"), vectors)
        })
        .collect::<Result<Vec<_>>>()?;

    let profile = intersection_profile(design);
    let s = d / k;
    let kf = T::from_usize_lossy(k);
    let mut predicted: Vec<T> = Vec::new();
    for &m in profile.histogram.keys() {
        match (m, flat.kind()) {
            (0, _) => predicted.push(T::zero()),
            (1, _) => predicted.push(kf.recip()),
            (m, FlatKind::RealHadamard) => {
                predicted.extend((0..=m).map(|j| T::from_usize_lossy(m.abs_diff(2 * j)) / kf));
            }
            // sum of m unimodular terms: only the extremes are fixed
            (m, FlatKind::Fourier) => {
                predicted.push(T::zero());
                predicted.push(T::from_usize_lossy(m) / kf);
            }
        }
    }
    predicted.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    predicted.dedup_by(|a, b| (*a - *b).abs() <= T::epsilon());

    let provenance = format!("rbd[{}; flat={}]", design.provenance(), flat.recipe());
    Ok(ConstructionResult {
        basis_set: BasisSet::new(provenance, bases)?,
        predicted_beta: T::from_usize_lossy(profile.mu) * (T::from_usize_lossy(s) / kf).sqrt(),
        predicted_delta: predicted,
        is_real: flat.kind() == FlatKind::RealHadamard,
        flat_kind: flat.kind(),
        block_size: k,
        blocks_per_class: s,
        mu: profile.mu,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetLabel {
    #[serde(rename = "MUB")]
    Mub,
    #[serde(rename = "APMUB")]
    Apmub,
    #[serde(rename = "beta-AMUB")]
    BetaAmub,
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetLabel::Mub => "MUB",
            SetLabel::Apmub => "APMUB",
            SetLabel::BetaAmub => "beta-AMUB",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification<T> {
    pub delta: Vec<T>,
    /// `√d · max Δ`.
    pub beta: T,
    /// `√d · min Δ`, or 0 when 0 ∈ Δ.
    pub beta_min: T,
    pub label: SetLabel,
}

/// Empirical overlap spectrum and MUB / APMUB / β-AMUB label.
pub fn classify_set<T: Real>(set: &BasisSet<T>, tol: T) -> Result<Classification<T>> {
    if set.len() < 2 {
        return Err(Error::TooFewBases { needed: 2, got: set.len() });
    }
    let delta = delta_spectrum(set, tol)?;
    let sqrt_d = T::from_usize_lossy(set.dim()).sqrt();
    let max = delta.last().copied().unwrap_or_else(T::zero);
    let min = delta.first().copied().unwrap_or_else(T::zero);
    let beta = sqrt_d * max;
    let has_zero = min <= tol;
    let beta_min = if has_zero { T::zero() } else { sqrt_d * min };
    let label = if delta.len() == 1 && (min - sqrt_d.recip()).abs() <= tol {
        SetLabel::Mub
    } else if delta.len() == 2 && has_zero && beta < T::lit(2.0) {
        SetLabel::Apmub
    } else {
        SetLabel::BetaAmub
    };
    Ok(Classification { delta, beta, beta_min, label })
}
