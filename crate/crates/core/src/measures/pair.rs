//! Overlap-based closeness measures for basis pairs and basis sets.
//!
//! All pair measures are functions of the overlap table alone; the `*_table`
//! variants take a precomputed table so one set of magnitudes feeds every
//! measure.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{overlap_table, Basis, BasisSet, OverlapTable};
use crate::scalar::Real;

fn require_pairs<T: Real>(set: &BasisSet<T>) -> Result<()> {
    if set.len() < 2 {
        return Err(Error::TooFewBases { needed: 2, got: set.len() });
    }
    Ok(())
}

/// Overlap tables for every pair `l < m`, in [`BasisSet::pairs`] order.
pub fn pair_tables<T: Real>(set: &BasisSet<T>) -> Vec<((usize, usize), OverlapTable<T>)> {
    set.pairs()
        .into_par_iter()
        .map(|(l, m)| {
            let t = overlap_table(&set.bases()[l], &set.bases()[m]).expect("set members share dim");
            ((l, m), t)
        })
        .collect()
}

/// `Σ_{i,j} |⟨ψ_i|φ_j⟩|^p` for a real power `p ≥ 0` (with `0^0 = 1`).
pub fn magnitude_power_sum<T: Real>(table: &OverlapTable<T>, power: T) -> T {
    if power == T::zero() {
        return T::from_usize_lossy(table.values().len());
    }
    table.values().iter().map(|&x| if x == T::zero() { x } else { x.powf(power) }).sum()
}

/// `Ω_t = Σ_{i,j} |⟨ψ_i|φ_j⟩|^{2t}`.
pub fn power_sum_table<T: Real>(table: &OverlapTable<T>, t: T) -> T {
    let two = T::lit(2.0);
    if t == two {
        return table.values().iter().map(|&x| (x * x) * (x * x)).sum();
    }
    magnitude_power_sum(table, two * t)
}

pub fn power_sum_pair<T: Real>(b1: &Basis<T>, b2: &Basis<T>, t: T) -> Result<T> {
    if t <= T::zero() {
        return Err(Error::InvalidParameters(format!("exponent t={t} must be positive")));
    }
    Ok(power_sum_table(&overlap_table(b1, b2)?, t))
}

/// Average of `Ω_t` over unordered pairs.
pub fn set_t_coherence<T: Real>(set: &BasisSet<T>, t: T) -> Result<T> {
    require_pairs(set)?;
    if t <= T::zero() {
        return Err(Error::InvalidParameters(format!("exponent t={t} must be positive")));
    }
    let tables = pair_tables(set);
    Ok(mean(tables.iter().map(|(_, tb)| power_sum_table(tb, t))))
}

/// `max_{i,j} | 1/√d − |⟨ψ_i|φ_j⟩| |`.
pub fn tau_table<T: Real>(table: &OverlapTable<T>) -> T {
    let c = T::from_usize_lossy(table.dim()).sqrt().recip();
    table.values().iter().map(|&x| (c - x).abs()).fold(T::zero(), T::max)
}

/// `(1/d) √(Σ_{i,j} (1/√d − |⟨ψ_i|φ_j⟩|)²)`.
pub fn sigma_table<T: Real>(table: &OverlapTable<T>) -> T {
    let d = T::from_usize_lossy(table.dim());
    let c = d.sqrt().recip();
    let s: T = table.values().iter().map(|&x| (c - x) * (c - x)).sum();
    s.sqrt() / d
}

/// `γ² = Σ_{i,j} (|⟨ψ_i|φ_j⟩|² − 1/d)²`.
pub fn gamma_squared_table<T: Real>(table: &OverlapTable<T>) -> T {
    let inv_d = T::from_usize_lossy(table.dim()).recip();
    table.values().iter().map(|&x| (x * x - inv_d).powi(2)).sum()
}

/// `D² = 1 − γ²/(d − 1)`; 1 for an unbiased pair, 0 for identical bases.
pub fn bengtsson_table<T: Real>(table: &OverlapTable<T>) -> T {
    let d = table.dim();
    if d == 1 {
        return T::zero();
    }
    T::one() - gamma_squared_table(table) / T::from_usize_lossy(d - 1)
}

pub fn tau_pair<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    Ok(tau_table(&overlap_table(b1, b2)?))
}

pub fn sigma_pair<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    Ok(sigma_table(&overlap_table(b1, b2)?))
}

pub fn bengtsson_pair<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    Ok(bengtsson_table(&overlap_table(b1, b2)?))
}

pub fn gamma_squared_pair<T: Real>(b1: &Basis<T>, b2: &Basis<T>) -> Result<T> {
    Ok(gamma_squared_table(&overlap_table(b1, b2)?))
}

fn max_over_pairs<T: Real>(set: &BasisSet<T>, f: impl Fn(&OverlapTable<T>) -> T + Sync) -> Result<T> {
    require_pairs(set)?;
    Ok(pair_tables(set).iter().map(|(_, t)| f(t)).fold(T::neg_infinity(), T::max))
}

fn mean<T: Real>(values: impl Iterator<Item = T>) -> T {
    let (sum, n) = values.fold((T::zero(), 0usize), |(s, n), v| (s + v, n + 1));
    sum / T::from_usize_lossy(n)
}

pub fn tau_set<T: Real>(set: &BasisSet<T>) -> Result<T> {
    max_over_pairs(set, tau_table)
}

pub fn sigma_set<T: Real>(set: &BasisSet<T>) -> Result<T> {
    max_over_pairs(set, sigma_table)
}

/// Largest pairwise `D²`.
pub fn dmax_set<T: Real>(set: &BasisSet<T>) -> Result<T> {
    max_over_pairs(set, bengtsson_table)
}

/// Average square distance `D̄²`, averaged over the `r(r−1)/2` unordered pairs.
pub fn asd_set<T: Real>(set: &BasisSet<T>) -> Result<T> {
    require_pairs(set)?;
    Ok(mean(pair_tables(set).iter().map(|(_, t)| bengtsson_table(t))))
}

/// `(1/r²) Σ_{l,m} D²_{l,m}` over all ordered pairs including `l = m`, which
/// equals `(r−1)/r` times [`asd_set`].
pub fn asd_set_all_ordered<T: Real>(set: &BasisSet<T>) -> Result<T> {
    require_pairs(set)?;
    let r = T::from_usize_lossy(set.len());
    let sum: T = pair_tables(set).iter().map(|(_, t)| bengtsson_table(t)).sum();
    Ok(T::lit(2.0) * sum / (r * r))
}

/// Sorts and merges values whose distance to the cluster's first member is
/// at most `tol`; each cluster is reported by its mean, snapped to 0 if ≤ `tol`.
pub fn cluster_values<T: Real>(mut values: Vec<T>, tol: T) -> Vec<T> {
    values.sort_by(|a, b| a.partial_cmp(b).expect("overlap magnitudes are finite"));
    let mut out = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let start = values[i];
        let mut j = i;
        let mut sum = T::zero();
        while j < values.len() && values[j] - start <= tol {
            sum += values[j];
            j += 1;
        }
        let rep = sum / T::from_usize_lossy(j - i);
        out.push(if rep <= tol { T::zero() } else { rep });
        i = j;
    }
    out
}

/// Distinct overlap magnitudes of one pair.
pub fn delta_pair<T: Real>(table: &OverlapTable<T>, tol: T) -> Vec<T> {
    cluster_values(table.values().to_vec(), tol)
}

/// Distinct overlap magnitudes across all cross-basis pairs.
pub fn delta_spectrum<T: Real>(set: &BasisSet<T>, tol: T) -> Result<Vec<T>> {
    require_pairs(set)?;
    let per_pair: Vec<Vec<T>> = pair_tables(set).into_iter().map(|(_, t)| delta_pair(&t, tol)).collect();
    Ok(cluster_values(per_pair.into_iter().flatten().collect(), tol))
}

/// Fraction of zero amplitudes per basis (threshold `T::ZERO_TOL`), averaged over bases.
pub fn sparsity<T: Real>(set: &BasisSet<T>) -> T {
    let tol = T::zero_tol();
    let d2 = T::from_usize_lossy(set.dim() * set.dim());
    mean(set.bases().iter().map(|b| {
        let zeros: usize = b.vectors().iter().map(|v| v.zero_count(tol)).sum();
        T::from_usize_lossy(zeros) / d2
    }))
}
