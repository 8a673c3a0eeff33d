//! Flat matrices: unitary matrices whose entries all have magnitude `n^{-1/2}`.
//!
//! Real Hadamard matrices come from Sylvester doubling, the two Paley
//! constructions, and Kronecker products of those. The Fourier matrix is the
//! complex fallback that exists for every order.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::field::{is_supported_order, FieldTable};
use crate::error::{Error, Result};
use crate::scalar::{unit_phase, Real};

/// Largest order any flat-matrix constructor will build.
pub const MAX_FLAT_ORDER: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlatKind {
    RealHadamard,
    Fourier,
}

impl fmt::Display for FlatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlatKind::RealHadamard => "real-hadamard",
            FlatKind::Fourier => "fourier",
        })
    }
}

/// How [`flat_matrix_for`] chooses between real and complex matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HadamardMode {
    /// Always the Fourier matrix.
    Complex,
    /// Real Hadamard when constructible, Fourier otherwise.
    #[default]
    PreferReal,
    /// Real Hadamard or an error.
    RequireReal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlatMatrix<T> {
    order: usize,
    entries: Vec<Complex<T>>,
    kind: FlatKind,
    recipe: String,
}

impl<T: Real> FlatMatrix<T> {
    fn from_pm1(order: usize, signs: &[i8], recipe: String) -> Self {
        let s = T::one() / T::from_usize_lossy(order).sqrt();
        let entries = signs.iter().map(|&x| Complex::new(if x > 0 { s } else { -s }, T::zero())).collect();
        Self { order, entries, kind: FlatKind::RealHadamard, recipe }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> FlatKind {
        self.kind
    }

    /// Short description of how the matrix was built, e.g. `paley-I(11)`.
    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.order + col]
    }

    pub fn column(&self, col: usize) -> Vec<Complex<T>> {
        (0..self.order).map(|r| self.entry(r, col)).collect()
    }

    /// `max |(M M*)_{ij} − δ_{ij}|`.
    pub fn unitarity_residual(&self) -> T {
        let n = self.order;
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..n {
                    acc += self.entry(i, k) * self.entry(j, k).conj();
                }
                if i == j {
                    acc -= Complex::new(T::one(), T::zero());
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// `max | |m_ij| − n^{-1/2} |`.
    pub fn flatness_residual(&self) -> T {
        let target = T::one() / T::from_usize_lossy(self.order).sqrt();
        self.entries.iter().map(|e| (e.norm() - target).abs()).fold(T::zero(), T::max)
    }
}

/// Scaled Sylvester–Hadamard matrix of order `2^k`.
pub fn sylvester_hadamard<T: Real>(k: u32) -> Result<FlatMatrix<T>> {
    let order = 1usize
        .checked_shl(k)
        .filter(|&n| n <= MAX_FLAT_ORDER)
        .ok_or(Error::TooLarge { order: if k < usize::BITS { 1 << k } else { usize::MAX }, max: MAX_FLAT_ORDER })?;
    Ok(FlatMatrix::from_pm1(order, &sylvester_pm1(k), format!("sylvester(2^{k})")))
}

fn sylvester_pm1(k: u32) -> Vec<i8> {
    let mut h = vec![1i8];
    for _ in 0..k {
        h = kronecker(&[1, 1, 1, -1], 2, &h, (h.len() as f64).sqrt() as usize);
    }
    h
}

fn kronecker(a: &[i8], na: usize, b: &[i8], nb: usize) -> Vec<i8> {
    let n = na * nb;
    let mut out = vec![0i8; n * n];
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    out[(i * nb + k) * n + j * nb + l] = a[i * na + j] * b[k * nb + l];
                }
            }
        }
    }
    out
}

/// Paley Hadamard matrix: order `q + 1` for `q ≡ 3 (mod 4)`, `2(q + 1)` for `q ≡ 1 (mod 4)`.
pub fn paley_hadamard<T: Real>(q: usize) -> Result<FlatMatrix<T>> {
    let (order, signs, recipe) = paley_pm1(q)?;
    Ok(FlatMatrix::from_pm1(order, &signs, recipe))
}

fn paley_pm1(q: usize) -> Result<(usize, Vec<i8>, String)> {
    if !is_supported_order(q) || q.is_multiple_of(2) {
        return Err(Error::NoPaley(q));
    }
    let f = FieldTable::new(q).map_err(|_| Error::NoPaley(q))?;
    // core (q+1)×(q+1) matrix with a bordered Jacobsthal block
    let m = q + 1;
    let mut core = vec![0i8; m * m];
    let skew = q % 4 == 3;
    for j in 1..m {
        core[j] = 1;
        core[j * m] = if skew { -1 } else { 1 };
    }
    for a in 0..q {
        for b in 0..q {
            core[(a + 1) * m + b + 1] = f.quadratic_character(f.sub(a, b));
        }
    }
    if skew {
        for i in 0..m {
            core[i * m + i] = 1;
        }
        if m > MAX_FLAT_ORDER {
            return Err(Error::TooLarge { order: m, max: MAX_FLAT_ORDER });
        }
        Ok((m, core, format!("paley-I({q})")))
    } else {
        let n = 2 * m;
        if n > MAX_FLAT_ORDER {
            return Err(Error::TooLarge { order: n, max: MAX_FLAT_ORDER });
        }
        let mut identity = vec![0i8; m * m];
        for i in 0..m {
            identity[i * m + i] = 1;
        }
        let a = kronecker(&core, m, &[1, 1, 1, -1], 2);
        let b = kronecker(&identity, m, &[1, -1, -1, -1], 2);
        let signs: Vec<i8> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Ok((n, signs, format!("paley-II({q})")))
    }
}

/// Fourier matrix `ω^{jk}/√n`, `ω = e^{2πi/n}`.
pub fn fourier_matrix<T: Real>(n: usize) -> Result<FlatMatrix<T>> {
    if n == 0 {
        return Err(Error::InvalidParameters("Fourier order must be ≥ 1".into()));
    }
    if n > MAX_FLAT_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_FLAT_ORDER });
    }
    let scale = T::one() / T::from_usize_lossy(n).sqrt();
    let two_pi_over_n = T::TAU() / T::from_usize_lossy(n);
    let entries = (0..n)
        .flat_map(|j| (0..n).map(move |k| (j * k) % n))
        .map(|e| unit_phase(two_pi_over_n * T::from_usize_lossy(e)) * scale)
        .collect();
    Ok(FlatMatrix { order: n, entries, kind: FlatKind::Fourier, recipe: format!("fourier({n})") })
}

/// ±1 real Hadamard of order `n` if one is reachable by the built-in recipes.
fn real_hadamard_pm1(n: usize) -> Option<(Vec<i8>, String)> {
    if n == 0 || n > MAX_FLAT_ORDER {
        return None;
    }
    if n == 1 {
        return Some((vec![1], "sylvester(2^0)".into()));
    }
    if n.is_power_of_two() {
        let k = n.trailing_zeros();
        return Some((sylvester_pm1(k), format!("sylvester(2^{k})")));
    }
    if !n.is_multiple_of(4) {
        return None;
    }
    if let Ok((order, signs, recipe)) = paley_pm1(n - 1) {
        if order == n {
            return Some((signs, recipe));
        }
    }
    if let Ok((order, signs, recipe)) = paley_pm1(n / 2 - 1) {
        if order == n {
            return Some((signs, recipe));
        }
    }
    // Kronecker composition, smallest left factor first
    (2..n).filter(|a| n.is_multiple_of(*a)).find_map(|a| {
        let b = n / a;
        if a == n || b == 1 {
            return None;
        }
        let (ha, ra) = real_hadamard_pm1(a)?;
        let (hb, rb) = real_hadamard_pm1(b)?;
        Some((kronecker(&ha, a, &hb, b), format!("{ra}⊗{rb}")))
    })
}

/// A flat matrix of order `n`, real when the mode asks and one is constructible.
pub fn flat_matrix_for<T: Real>(n: usize, mode: HadamardMode) -> Result<FlatMatrix<T>> {
    if mode != HadamardMode::Complex {
        if let Some((signs, recipe)) = real_hadamard_pm1(n) {
            return Ok(FlatMatrix::from_pm1(n, &signs, recipe));
        }
        if mode == HadamardMode::RequireReal {
            return Err(Error::NoRealHadamard(n));
        }
    }
    fourier_matrix(n)
}
