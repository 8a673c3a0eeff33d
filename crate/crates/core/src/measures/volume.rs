//! Volume proxies for tomographic efficiency of a basis set.
//!
//! Each basis vector maps to the unit-norm traceless operator
//! `√(d/(d−1)) (|ψ⟩⟨ψ| − I/d)`. Within a basis these sum to zero, so only
//! `d − 1` are independent; the last one is dropped. The parallelepiped they
//! span has volume `√det G` with `G` the Gram matrix under `Tr(A B)`.

use crate::error::{Error, Result};
use crate::linalg::BasisSet;
use crate::measures::geometry::TracelessProjector;
use crate::measures::pair::pair_tables;
use crate::scalar::Real;

/// `Σ_{l<m} Σ_{i,j} log(1 − (|⟨ψ_i^l|ψ_j^m⟩|² − 1/d)²)`; zero for a set of MUBs.
pub fn log_volume_ratio_approx<T: Real>(set: &BasisSet<T>) -> Result<T> {
    if set.len() < 2 {
        return Err(Error::TooFewBases { needed: 2, got: set.len() });
    }
    let inv_d = T::from_usize_lossy(set.dim()).recip();
    Ok(pair_tables(set)
        .iter()
        .flat_map(|(_, t)| t.values().iter().map(move |&x| (T::one() - (x * x - inv_d).powi(2)).ln()))
        .sum())
}

/// Dense symmetric Gram matrix of the retained projectors, `d − 1` per basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T> {
    size: usize,
    block: usize,
    entries: Vec<T>,
}

impl<T: Real> GramMatrix<T> {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Rows per basis (`d − 1`).
    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.size + j]
    }

    /// Largest `|G_ij|` with `i`, `j` in different bases.
    pub fn max_cross_block(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.size {
            for j in 0..self.size {
                if i / self.block != j / self.block {
                    m = m.max(self.get(i, j).abs());
                }
            }
        }
        m
    }

    /// `½ log det G` via Cholesky; `−∞` when `G` is numerically singular.
    pub fn half_log_det(&self) -> T {
        let n = self.size;
        let scale = (0..n).map(|i| self.get(i, i)).fold(T::zero(), T::max);
        let floor = scale * T::epsilon() * T::from_usize_lossy(n.max(1)) * T::lit(16.0);
        let mut l = vec![T::zero(); n * n];
        let mut acc = T::zero();
        for j in 0..n {
            let mut diag = self.get(j, j);
            for k in 0..j {
                diag -= l[j * n + k] * l[j * n + k];
            }
            if diag.is_nan() || diag <= floor {
                return T::neg_infinity();
            }
            let ljj = diag.sqrt();
            l[j * n + j] = ljj;
            acc += ljj.ln();
            for i in j + 1..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i * n + k] * l[j * n + k];
                }
                l[i * n + j] = s / ljj;
            }
        }
        acc
    }
}

/// Gram matrix of normalized traceless projectors, evaluated as explicit traces.
pub fn gram_matrix<T: Real>(set: &BasisSet<T>) -> Result<GramMatrix<T>> {
    let d = set.dim();
    if d < 2 {
        return Err(Error::InvalidParameters("volume needs d ≥ 2".into()));
    }
    let projectors: Vec<TracelessProjector<T>> =
        set.bases().iter().flat_map(|b| b.vectors()[..d - 1].iter().map(TracelessProjector::normalized)).collect();
    let n = projectors.len();
    let mut entries = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let g = projectors[i].trace_product(&projectors[j]);
            entries[i * n + j] = g;
            entries[j * n + i] = g;
        }
    }
    Ok(GramMatrix { size: n, block: d - 1, entries })
}

/// `½ log det G` for the retained projectors of the whole set.
pub fn gram_log_volume<T: Real>(set: &BasisSet<T>) -> Result<T> {
    Ok(gram_matrix(set)?.half_log_det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::prime_mubs;
    use crate::linalg::{random_basis, Basis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn mub_gram_is_block_diagonal() {
        let set = prime_mubs::<f64>(3).unwrap();
        let g = gram_matrix(&set).unwrap();
        assert_eq!((g.size(), g.block_size()), (8, 2));
        assert!(g.max_cross_block() < 1e-12);
        for i in 0..g.size() {
            assert!((g.get(i, i) - 1.0).abs() < 1e-12);
        }
        // within a basis, distinct projectors have Tr = −1/(d−1)
        assert!((g.get(0, 1) + 0.5).abs() < 1e-12);
        assert!(log_volume_ratio_approx(&set).unwrap().abs() < 1e-12);
        // blocks [[1, −½], [−½, 1]] have det ¾
        let expected = 0.5 * 4.0 * (0.75f64).ln();
        assert!((gram_log_volume(&set).unwrap() - expected).abs() < 1e-10);
    }

    #[test]
    fn repeated_basis_is_degenerate() {
        let b = Basis::<f64>::canonical(3);
        let set = BasisSet::new("twice", vec![b.clone(), b]).unwrap();
        assert_eq!(gram_log_volume(&set).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn random_sets_lose_volume() {
        let mub = gram_log_volume(&prime_mubs::<f64>(3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let bases = (0..4).map(|_| random_basis::<f64, _>(3, &mut rng)).collect();
            let set = BasisSet::new("random", bases).unwrap();
            assert!(gram_log_volume(&set).unwrap() < mub);
            assert!(log_volume_ratio_approx(&set).unwrap() < 0.0);
        }
    }
}
