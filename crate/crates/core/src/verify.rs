//! Invariant suite run against an arbitrary basis set.
//!
//! Every check is evaluated over all pairs; a failing check lists the
//! offending pairs together with the signed margin by which they miss
//! (negative means violated). Bounds that scale with `d` use the tolerance
//! relative to the bound's magnitude (absolute below 1).

use serde::Serialize;

use crate::constructors::{classify_set, SetLabel};
use crate::linalg::{validate_basis_set, BasisSet, OverlapTable};
use crate::measures::{bengtsson_table, magnitude_power_sum, pair_tables, power_sum_table, sigma_table, tau_table};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub l: usize,
    pub m: usize,
    pub margin: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Smallest margin seen; negative when violated.
    pub worst_margin: f64,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub d: usize,
    pub r: usize,
    pub tol: f64,
    pub label: Option<SetLabel>,
    pub beta: Option<f64>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

const MAX_LISTED: usize = 20;

struct Builder {
    name: String,
    worst: f64,
    violations: Vec<Violation>,
    failed: usize,
}

impl Builder {
    fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), worst: f64::INFINITY, violations: Vec::new(), failed: 0 }
    }

    /// Records `margin` (≥ −tol passes) for pair `(l, m)`.
    fn record(&mut self, l: usize, m: usize, margin: f64, tol: f64, detail: impl FnOnce() -> String) {
        self.worst = self.worst.min(margin);
        if margin < -tol {
            self.failed += 1;
            if self.violations.len() < MAX_LISTED {
                self.violations.push(Violation { l, m, margin, detail: detail() });
            }
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.failed == 0,
            worst_margin: if self.worst.is_finite() { self.worst } else { 0.0 },
            violations: self.violations,
        }
    }
}

fn scaled(tol: f64, bound: f64) -> f64 {
    tol * bound.abs().max(1.0)
}

/// Runs the orthonormality, power-sum, `σ ≤ τ`, distance-sandwich and
/// label-specific closed-form checks.
pub fn verify_set<T: Real>(set: &BasisSet<T>, tol: f64) -> VerifyReport {
    let d = set.dim();
    let df = d as f64;
    let mut checks = Vec::new();

    let v = validate_basis_set(set, T::lit(tol));
    let mut ortho = Builder::new("orthonormality");
    for (bi, res) in v.per_basis.iter().enumerate() {
        let r = res.max().to_f64_lossy();
        ortho.record(bi, bi, -r, tol, || format!("basis {bi} residual {r:e}"));
    }
    checks.push(ortho.finish());

    let tables: Vec<((usize, usize), OverlapTable<T>)> = pair_tables(set);
    let mut thm = Builder::new("power-sum-bounds");
    let mut st = Builder::new("sigma-le-tau");
    let mut sandwich = Builder::new("distance-sandwich");
    let mut range = Builder::new("distance-range");
    for ((l, m), tb) in &tables {
        let (l, m) = (*l, *m);
        for delta in [0.5, 1.0, 2.0] {
            let up = magnitude_power_sum(tb, T::lit(2.0 + delta)).to_f64_lossy();
            let down = magnitude_power_sum(tb, T::lit(2.0 - delta)).to_f64_lossy();
            let lo_up = df.powf(1.0 - delta / 2.0);
            let hi_down = df.powf(1.0 + delta / 2.0);
            let margin = (up - lo_up) / scaled(1.0, lo_up);
            thm.record(l, m, margin.min((df - up) / df), tol, || {
                format!("Σ|x|^{} = {up} outside [{lo_up}, {df}]", 2.0 + delta)
            });
            let margin = ((down - df) / df).min((hi_down - down) / hi_down);
            thm.record(l, m, margin, tol, || format!("Σ|x|^{} = {down} outside [{df}, {hi_down}]", 2.0 - delta));
        }
        let tau = tau_table(tb).to_f64_lossy();
        let sigma = sigma_table(tb).to_f64_lossy();
        st.record(l, m, tau - sigma, tol, || format!("σ = {sigma} > τ = {tau}"));
        let d2 = bengtsson_table(tb).to_f64_lossy();
        let s2 = sigma * sigma;
        let lo = 1.0 - (df + df.sqrt()).powi(2) / (df - 1.0) * s2;
        let hi = 1.0 - df / (df - 1.0) * s2;
        sandwich.record(l, m, (d2 - lo).min(hi - d2), tol, || format!("D² = {d2} outside [{lo}, {hi}]"));
        range.record(l, m, d2.min(1.0 - d2), tol, || format!("D² = {d2} outside [0, 1]"));
    }
    checks.extend([thm.finish(), st.finish(), sandwich.finish(), range.finish()]);

    let classification = (set.len() >= 2).then(|| classify_set(set, T::cluster_tol()).ok()).flatten();
    let (label, beta) = match &classification {
        Some(c) => (Some(c.label), Some(c.beta.to_f64_lossy())),
        None => (None, None),
    };
    if let (Some(label), Some(beta)) = (label, beta) {
        checks.extend(label_checks(&tables, d, label, beta, tol));
    }

    let passed = checks.iter().all(|c| c.passed);
    VerifyReport { d, r: set.len(), tol, label, beta, checks, passed }
}

fn label_checks<T: Real>(
    tables: &[((usize, usize), OverlapTable<T>)],
    d: usize,
    label: SetLabel,
    beta: f64,
    tol: f64,
) -> Vec<Check> {
    let df = d as f64;
    let inv_sqrt = df.sqrt().recip();
    let n = tables.len() as f64;
    let asd: f64 = tables.iter().map(|(_, t)| bengtsson_table(t).to_f64_lossy()).sum::<f64>() / n;
    let mut out = Vec::new();
    match label {
        SetLabel::Mub => {
            let mut unbiased = Builder::new("mub-unbiased");
            for ((l, m), tb) in tables {
                let tau = tau_table(tb).to_f64_lossy();
                let om = power_sum_table(tb, T::lit(2.0)).to_f64_lossy();
                let d2 = bengtsson_table(tb).to_f64_lossy();
                let margin = -(tau.abs().max((om - 1.0).abs()).max((d2 - 1.0).abs()));
                unbiased.record(*l, *m, margin, tol, || format!("τ = {tau}, Ω₂ = {om}, D² = {d2}"));
            }
            out.push(unbiased.finish());
        }
        SetLabel::Apmub => {
            let sigma2 = 2.0 / df * (1.0 - 1.0 / beta);
            let mut tau_c = Builder::new("apmub-tau");
            let mut sigma_c = Builder::new("apmub-sigma");
            let mut census = Builder::new("apmub-census");
            let zero = T::zero_tol();
            for ((l, m), tb) in tables {
                let (l, m) = (*l, *m);
                let tau = tau_table(tb).to_f64_lossy();
                tau_c.record(l, m, -(tau - inv_sqrt).abs(), tol, || format!("τ = {tau}, expected {inv_sqrt}"));
                let s = sigma_table(tb).to_f64_lossy().powi(2);
                sigma_c.record(l, m, -(s - sigma2).abs(), tol, || format!("σ² = {s}, expected {sigma2}"));
                let nonzero = tb.values().iter().filter(|&&x| x > zero).count() as f64 / (df * df);
                let target = beta.powi(-2);
                census.record(l, m, -(nonzero - target).abs(), tol, || {
                    format!("nonzero fraction {nonzero}, expected {target}")
                });
            }
            let expected = 1.0 - (beta * beta - 1.0) / (df - 1.0);
            let mut asd_c = Builder::new("apmub-asd");
            asd_c.record(0, 0, -(asd - expected).abs(), tol, || format!("D̄² = {asd}, expected {expected}"));
            out.extend([tau_c.finish(), sigma_c.finish(), census.finish(), asd_c.finish()]);
        }
        SetLabel::BetaAmub => {
            let lo = 1.0 - (beta.powi(4) - 1.0) / (df - 1.0);
            let mut c = Builder::new("amub-asd-bound");
            c.record(0, 0, (asd - lo).min(1.0 - asd), tol, || format!("D̄² = {asd} outside [{lo}, 1]"));
            out.push(c.finish());
        }
    }
    out
}
