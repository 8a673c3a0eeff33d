//! Raw key rate and sifted error under an intercept–resend attack.
//!
//! Alice picks one of the `k` bases of the set and a vector from it, both
//! uniformly. Eve measures in a uniformly chosen basis and resends the
//! outcome vector; Bob measures in Alice's basis. Only rounds where Bob
//! guessed Alice's basis are kept, so the error is conditioned on that.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{overlap_table, BasisSet};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QkdOutcome {
    /// Bits per transmitted system.
    pub raw_rate: f64,
    pub sift_error: f64,
    /// 0 for closed-form or exhaustive values.
    pub trials: u64,
    pub std_error: f64,
    pub seed: u64,
}

fn check_dk(d: usize, k: usize) -> Result<()> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameters(format!("need d ≥ 2 and k ≥ 1, got d={d}, k={k}")));
    }
    Ok(())
}

/// `(1/k) log₂ d`.
pub fn raw_key_rate(d: usize, k: usize) -> Result<f64> {
    check_dk(d, k)?;
    Ok((d as f64).log2() / k as f64)
}

/// `((k−1)/k)(1 − 1/d)`, the sifted error for a set of `k` MUBs.
pub fn mub_sift_error(d: usize, k: usize) -> Result<f64> {
    check_dk(d, k)?;
    Ok((k as f64 - 1.0) / k as f64 * (1.0 - 1.0 / d as f64))
}

/// `p[l][e][i·d + j] = |⟨ψ_i^l|ψ_j^e⟩|²`.
fn transition_tables<T: Real>(set: &BasisSet<T>) -> Vec<Vec<Vec<f64>>> {
    let b = set.bases();
    b.iter()
        .map(|bl| {
            b.iter()
                .map(|be| {
                    let t = overlap_table(bl, be).expect("set members share dim");
                    t.values().iter().map(|x| x.to_f64_lossy().powi(2)).collect()
                })
                .collect()
        })
        .collect()
}

fn require_two<T: Real>(set: &BasisSet<T>) -> Result<()> {
    if set.len() < 2 {
        return Err(Error::TooFewBases { needed: 2, got: set.len() });
    }
    Ok(())
}

/// Exact expectation over all `(l, i, e)`: `mean Σ_j p_j (1 − p_j)`.
pub fn exhaustive_sift_error<T: Real>(set: &BasisSet<T>) -> Result<QkdOutcome> {
    require_two(set)?;
    let (d, k) = (set.dim(), set.len());
    let p = transition_tables(set);
    let mut total = 0.0;
    for pl in &p {
        for ple in pl {
            for i in 0..d {
                total += ple[i * d..(i + 1) * d].iter().map(|&q| q * (1.0 - q)).sum::<f64>();
            }
        }
    }
    Ok(QkdOutcome {
        raw_rate: raw_key_rate(d, k)?,
        sift_error: total / (k * k * d) as f64,
        trials: 0,
        std_error: 0.0,
        seed: 0,
    })
}

/// Monte Carlo estimate; trial `n` draws from stream `n` of a generator
/// seeded with `seed`, so the result does not depend on scheduling.
pub fn intercept_resend_sift_error<T: Real>(set: &BasisSet<T>, trials: u64, seed: u64) -> Result<QkdOutcome> {
    require_two(set)?;
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    let (d, k) = (set.dim(), set.len());
    let p = transition_tables(set);
    let errors: u64 = (0..trials)
        .into_par_iter()
        .map(|n| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(n);
            let l = rng.random_range(0..k);
            let i = rng.random_range(0..d);
            let e = rng.random_range(0..k);
            let row = &p[l][e][i * d..(i + 1) * d];
            let u: f64 = rng.random();
            let mut acc = 0.0;
            let mut j = d - 1;
            for (idx, &q) in row.iter().enumerate() {
                acc += q;
                if u < acc {
                    j = idx;
                    break;
                }
            }
            // Bob recovers i with probability |⟨ψ_i^l|ψ_j^e⟩|²
            let keep: f64 = rng.random();
            u64::from(keep >= row[j])
        })
        .sum();
    let est = errors as f64 / trials as f64;
    Ok(QkdOutcome {
        raw_rate: raw_key_rate(d, k)?,
        sift_error: est,
        trials,
        std_error: (est * (1.0 - est) / trials as f64).sqrt(),
        seed,
    })
}
