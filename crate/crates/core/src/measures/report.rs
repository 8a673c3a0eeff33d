//! Full measure report for a basis set, with JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::constructors::{classify_set, Classification};
use crate::error::Result;
use crate::linalg::BasisSet;
use crate::measures::cluster_values;
use crate::measures::frame::{design_defect, DesignDefect};
use crate::measures::pair::{
    bengtsson_table, delta_pair, gamma_squared_table, pair_tables, power_sum_table, sigma_table, sparsity, tau_table,
};
use crate::measures::volume::{gram_log_volume, log_volume_ratio_approx};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureOptions<T> {
    /// Exponents `t` for `Ω_t`; `t = 2` is always included.
    pub t_values: Vec<T>,
    /// Orders for the frame potential.
    pub frame_orders: Vec<u32>,
    pub cluster_tol: T,
    pub volume: bool,
}

impl<T: Real> Default for MeasureOptions<T> {
    fn default() -> Self {
        Self { t_values: vec![T::lit(2.0)], frame_orders: vec![1, 2, 3], cluster_tol: T::cluster_tol(), volume: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TValue<T> {
    pub t: T,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairMeasures<T> {
    pub l: usize,
    pub m: usize,
    pub omega_2: T,
    pub omega_t: Vec<TValue<T>>,
    pub tau: T,
    pub sigma: T,
    pub d_squared: T,
    pub gamma_squared: T,
    pub delta_pair: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeTerms<T> {
    pub log_ratio_approx: T,
    /// Present only for `r = d + 1` bases; `None` inside also serializes
    /// a degenerate (`−∞`) volume as `null`.
    pub gram_log_volume: Option<T>,
}

/// Set-level quantities are `None` when the set holds a single basis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport<T> {
    pub d: usize,
    pub r: usize,
    pub provenance: String,
    pub pairs: Vec<PairMeasures<T>>,
    pub omega_t: Option<Vec<TValue<T>>>,
    pub tau: Option<T>,
    pub sigma: Option<T>,
    pub asd: Option<T>,
    pub asd_all_ordered: Option<T>,
    pub d_squared_max: Option<T>,
    pub delta: Option<Vec<T>>,
    pub sparsity: T,
    pub frame_potentials: Vec<DesignDefect<T>>,
    pub volume: Option<VolumeTerms<T>>,
    pub classification: Option<Classification<T>>,
}

fn mean<T: Real>(xs: impl Iterator<Item = T>) -> T {
    let (s, n) = xs.fold((T::zero(), 0usize), |(s, n), x| (s + x, n + 1));
    s / T::from_usize_lossy(n)
}

pub fn measure_set<T: Real>(set: &BasisSet<T>, opts: &MeasureOptions<T>) -> Result<MeasureReport<T>> {
    let two = T::lit(2.0);
    let mut ts = opts.t_values.clone();
    if !ts.contains(&two) {
        ts.insert(0, two);
    }
    for &t in &ts {
        if t <= T::zero() {
            return Err(crate::error::Error::InvalidParameters(format!("exponent t={t} must be positive")));
        }
    }

    let pairs: Vec<PairMeasures<T>> = pair_tables(set)
        .into_iter()
        .map(|((l, m), tb)| PairMeasures {
            l,
            m,
            omega_2: power_sum_table(&tb, two),
            omega_t: ts.iter().map(|&t| TValue { t, value: power_sum_table(&tb, t) }).collect(),
            tau: tau_table(&tb),
            sigma: sigma_table(&tb),
            d_squared: bengtsson_table(&tb),
            gamma_squared: gamma_squared_table(&tb),
            delta_pair: delta_pair(&tb, opts.cluster_tol),
        })
        .collect();

    let vectors = set.all_vectors();
    let frame_potentials = opts.frame_orders.iter().map(|&t| design_defect(&vectors, t)).collect::<Result<Vec<_>>>()?;

    let has_pairs = !pairs.is_empty();
    let r = set.len();
    let maxf = |f: fn(&PairMeasures<T>) -> T| pairs.iter().map(f).fold(T::neg_infinity(), T::max);
    let asd = has_pairs.then(|| mean(pairs.iter().map(|p| p.d_squared)));
    let rf = T::from_usize_lossy(r);

    let volume = if opts.volume && has_pairs {
        let gram = if r == set.dim() + 1 {
            let v = gram_log_volume(set)?;
            v.is_finite().then_some(v)
        } else {
            None
        };
        Some(VolumeTerms { log_ratio_approx: log_volume_ratio_approx(set)?, gram_log_volume: gram })
    } else {
        None
    };

    Ok(MeasureReport {
        d: set.dim(),
        r,
        provenance: set.provenance().to_string(),
        omega_t: has_pairs.then(|| {
            ts.iter()
                .enumerate()
                .map(|(k, &t)| TValue { t, value: mean(pairs.iter().map(|p| p.omega_t[k].value)) })
                .collect()
        }),
        tau: has_pairs.then(|| maxf(|p| p.tau)),
        sigma: has_pairs.then(|| maxf(|p| p.sigma)),
        asd_all_ordered: asd.map(|a| a * (rf - T::one()) / rf),
        asd,
        d_squared_max: has_pairs.then(|| maxf(|p| p.d_squared)),
        delta: has_pairs.then(|| {
            cluster_values(pairs.iter().flat_map(|p| p.delta_pair.iter().copied()).collect(), opts.cluster_tol)
        }),
        sparsity: sparsity(set),
        frame_potentials,
        volume,
        classification: if has_pairs { Some(classify_set(set, opts.cluster_tol)?) } else { None },
        pairs,
    })
}

impl<T: Real> MeasureReport<T> {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One `pair` row per unordered pair and one `set` summary row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,l,m,omega_2,tau,sigma,d2,gamma2\n");
        for p in &self.pairs {
            let _ = writeln!(
                out,
                "pair,{},{},{},{},{},{},{}",
                p.l, p.m, p.omega_2, p.tau, p.sigma, p.d_squared, p.gamma_squared
            );
        }
        let opt = |v: Option<T>| v.map(|x| x.to_string()).unwrap_or_default();
        let omega_2 = self.omega_t.as_ref().and_then(|v| v.iter().find(|e| e.t == T::lit(2.0)).map(|e| e.value));
        let gamma = (!self.pairs.is_empty()).then(|| mean(self.pairs.iter().map(|p| p.gamma_squared)));
        let _ = writeln!(
            out,
            "set,,,{},{},{},{},{}",
            opt(omega_2),
            opt(self.tau),
            opt(self.sigma),
            opt(self.asd),
            opt(gamma)
        );
        out
    }
}
