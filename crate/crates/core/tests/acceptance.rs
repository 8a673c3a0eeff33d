//! Acceptance suite: thirteen numbered criteria, one PASS/FAIL line each,
//! with failing sub-checks listed underneath. Exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use mubkit::algebra::{paley_hadamard, HadamardMode};
use mubkit::apps::{
    exhaustive_sift_error, intercept_resend_sift_error, maassen_uffink_bound, mub_sift_error, outcome_entropy,
    raw_key_rate,
};
use mubkit::constructors::{classify_set, prime_mubs, rbd_to_bases, rbd_to_bases_with, weak_mubs, SetLabel};
use mubkit::designs::{
    affine_resolvable_bibd, kirkman_kts15, q2_minus_1_design, resolvable_transversal_design, uniform_partner_pattern,
};
use mubkit::linalg::{overlap_table, random_basis, random_state, Basis, BasisSet, CVector, OverlapTable};
use mubkit::measures::{
    asd_set, bengtsson_table, delta_spectrum, design_defect, gamma_squared_geometric, gamma_squared_table,
    gram_log_volume, gram_matrix, log_volume_ratio_approx, magnitude_power_sum, pair_tables, power_sum_table,
    set_t_coherence, sigma_table, sparsity, tau_table, traceless_dot, traceless_dot_explicit,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const TOL: f64 = 1e-9;
const CLUSTER: f64 = 1e-7;

struct Sub {
    name: String,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Checks(Vec<Sub>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push(Sub { name: name.into(), ok, detail: detail.into() });
    }

    fn close(&mut self, name: impl Into<String>, got: f64, want: f64, tol: f64) {
        let ok = (got - want).abs() <= tol;
        self.check(name, ok, format!("got {got:.12}, want {want:.12}, |err| = {:.2e}", (got - want).abs()));
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn same_spectrum(got: &[f64], want: &[f64]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(a, b)| (a - b).abs() <= TOL)
}

fn fmt(v: &[f64]) -> String {
    format!("{:?}", v.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>())
}

/// Every construction the suite exercises, with a short name.
fn constructed() -> Vec<(String, BasisSet<f64>)> {
    let mut out = Vec::new();
    for p in [2, 3, 5, 7, 11, 13] {
        out.push((format!("prime({p})"), prime_mubs(p).unwrap()));
    }
    for (k, s) in [(3, 4), (4, 5), (5, 7), (7, 8)] {
        let d = resolvable_transversal_design(k, s).unwrap();
        out.push((format!("rtd({k},{s})"), rbd_to_bases(&d, HadamardMode::PreferReal).unwrap().basis_set));
    }
    for (p, q) in [(2, 3), (3, 5), (2, 5)] {
        out.push((format!("weak({p},{q})"), weak_mubs(p, q).unwrap()));
    }
    for q in [7, 11] {
        out.push((format!("q2m1({q})"), q2m1_paley(q)));
    }
    out.push(("kts15".into(), rbd_to_bases(&kirkman_kts15(), HadamardMode::Complex).unwrap().basis_set));
    out
}

fn q2m1_paley(q: usize) -> BasisSet<f64> {
    let design = q2_minus_1_design(q).unwrap();
    rbd_to_bases_with(&design, &paley_hadamard(q).unwrap()).unwrap().basis_set
}

fn random_pair(d: usize, rng: &mut ChaCha8Rng) -> (Basis<f64>, Basis<f64>) {
    (random_basis(d, rng), random_basis(d, rng))
}

fn c1() -> Checks {
    let mut c = Checks::default();
    for p in [2, 3, 5, 7, 11, 13] {
        let set = prime_mubs::<f64>(p).unwrap();
        c.check(format!("p={p}: {} bases", p + 1), set.len() == p + 1, format!("got {}", set.len()));
        let delta = delta_spectrum(&set, CLUSTER).unwrap();
        let want = 1.0 / (p as f64).sqrt();
        c.check(format!("p={p}: Δ = {{1/√p}}"), same_spectrum(&delta, &[want]), fmt(&delta));
        let tables = pair_tables(&set);
        let worst = tables.iter().fold(0.0f64, |w, (_, t)| {
            w.max(tau_table(t))
                .max(sigma_table(t))
                .max((bengtsson_table(t) - 1.0).abs())
                .max((power_sum_table(t, 2.0) - 1.0).abs())
        });
        c.check(format!("p={p}: τ=σ=0, D²=1, Ω₂=1 on every pair"), worst <= TOL, format!("max deviation {worst:.2e}"));
    }
    c
}

/// Known MUB pairs per dimension, used for the equality cases.
fn mub_pair(d: usize) -> Option<(Basis<f64>, Basis<f64>)> {
    let prime = mubkit::algebra::is_prime(d);
    if prime {
        let s = prime_mubs::<f64>(d).unwrap();
        return Some((s.bases()[0].clone(), s.bases()[1].clone()));
    }
    for q in [2, 3, 4] {
        if q * q == d {
            let s = rbd_to_bases::<f64>(&affine_resolvable_bibd(q).unwrap(), HadamardMode::PreferReal).unwrap();
            let b = s.basis_set.bases();
            return Some((b[0].clone(), b[1].clone()));
        }
    }
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 5)] {
        if p * q == d {
            let s = weak_mubs::<f64>(p, q).unwrap();
            // indices i(q+1)+j; (0,0) and (1,1) differ in both factors
            return Some((s.bases()[0].clone(), s.bases()[q + 2].clone()));
        }
    }
    None
}

fn c2() -> Checks {
    let mut c = Checks::default();
    let deltas = [0.5, 1.0, 2.0];
    let mut r = rng(2);
    for d in 2..=16usize {
        let df = d as f64;
        let mut worst = f64::INFINITY;
        for _ in 0..100 {
            let (a, b) = random_pair(d, &mut r);
            let t = overlap_table(&a, &b).unwrap();
            for delta in deltas {
                let up = magnitude_power_sum(&t, 2.0 + delta);
                let down = magnitude_power_sum(&t, 2.0 - delta);
                worst = worst
                    .min(up - df.powf(1.0 - delta / 2.0))
                    .min(df - up)
                    .min(down - df)
                    .min(df.powf(1.0 + delta / 2.0) - down);
            }
        }
        c.check(
            format!("d={d}: 100 random pairs inside both intervals"),
            worst >= -TOL,
            format!("worst margin {worst:.2e}"),
        );
        match mub_pair(d) {
            Some((a, b)) => {
                let t = overlap_table(&a, &b).unwrap();
                let mut err = 0.0f64;
                for delta in deltas {
                    err = err
                        .max((magnitude_power_sum(&t, 2.0 + delta) - df.powf(1.0 - delta / 2.0)).abs())
                        .max((magnitude_power_sum(&t, 2.0 - delta) - df.powf(1.0 + delta / 2.0)).abs());
                }
                c.check(format!("d={d}: MUB pair attains the bounds"), err <= TOL, format!("max |err| {err:.2e}"));
            }
            None => c.check(format!("d={d}: no MUB pair constructible here; equality not tested"), true, ""),
        }
    }
    c
}

fn relationship_margin(t: &OverlapTable<f64>) -> (f64, f64) {
    let d = t.dim() as f64;
    let (tau, sigma, d2) = (tau_table(t), sigma_table(t), bengtsson_table(t));
    let s2 = sigma * sigma;
    let lo = 1.0 - (d + d.sqrt()).powi(2) / (d - 1.0) * s2;
    let hi = 1.0 - d / (d - 1.0) * s2;
    (tau - sigma, (d2 - lo).min(hi - d2))
}

fn c3(sets: &[(String, BasisSet<f64>)]) -> Checks {
    let mut c = Checks::default();
    for (name, set) in sets {
        let (mut st, mut sw) = (f64::INFINITY, f64::INFINITY);
        for (_, t) in pair_tables(set) {
            let (a, b) = relationship_margin(&t);
            st = st.min(a);
            sw = sw.min(b);
        }
        c.check(format!("{name}: σ ≤ τ and sandwich"), st >= -TOL && sw >= -TOL, format!("margins {st:.2e}, {sw:.2e}"));
    }
    let mut r = rng(3);
    let (mut st, mut sw) = (f64::INFINITY, f64::INFINITY);
    for d in 2..=16 {
        for _ in 0..50 {
            let (a, b) = random_pair(d, &mut r);
            let (x, y) = relationship_margin(&overlap_table(&a, &b).unwrap());
            st = st.min(x);
            sw = sw.min(y);
        }
    }
    c.check(
        "750 random pairs, d=2..16: σ ≤ τ and sandwich",
        st >= -TOL && sw >= -TOL,
        format!("margins {st:.2e}, {sw:.2e}"),
    );
    c
}

fn rtd_sets() -> Vec<((usize, usize), BasisSet<f64>)> {
    [(3, 4), (4, 5), (5, 7), (7, 8)]
        .into_iter()
        .map(|(k, s)| {
            let d = resolvable_transversal_design(k, s).unwrap();
            ((k, s), rbd_to_bases(&d, HadamardMode::PreferReal).unwrap().basis_set)
        })
        .collect()
}

fn c4() -> Checks {
    let mut c = Checks::default();
    for ((k, s), set) in rtd_sets() {
        let d = (k * s) as f64;
        let beta = (s as f64 / k as f64).sqrt();
        let tables = pair_tables(&set);
        let label = classify_set(&set, CLUSTER).unwrap().label;
        c.check(format!("({k},{s}): classified APMUB"), label == SetLabel::Apmub, format!("{label}"));
        let tau = tables.iter().map(|(_, t)| tau_table(t)).fold(0.0, f64::max);
        c.close(format!("({k},{s}): τ = 1/√d"), tau, d.sqrt().recip(), TOL);
        let sigma = tables.iter().map(|(_, t)| sigma_table(t)).fold(0.0, f64::max);
        c.close(format!("({k},{s}): σ² = (2/d)(1−1/β)"), sigma * sigma, 2.0 / d * (1.0 - 1.0 / beta), TOL);
        let asd = tables.iter().map(|(_, t)| bengtsson_table(t)).sum::<f64>() / tables.len() as f64;
        c.close(format!("({k},{s}): D̄² = 1−(β²−1)/(d−1)"), asd, 1.0 - (beta * beta - 1.0) / (d - 1.0), TOL);
    }
    c
}

fn c5() -> Checks {
    let mut c = Checks::default();
    for ((k, s), set) in rtd_sets() {
        let beta2 = s as f64 / k as f64;
        let tables = pair_tables(&set);
        let total: usize = tables.iter().map(|(_, t)| t.values().len()).sum();
        let nonzero: usize = tables.iter().map(|(_, t)| t.values().iter().filter(|&&x| x > TOL).count()).sum();
        c.close(format!("({k},{s}): nonzero fraction = 1/β²"), nonzero as f64 / total as f64, 1.0 / beta2, TOL);
    }
    c
}

/// 1: overlaps 1/√q on q²p entries; 2: 1/√p on p²q entries; 3: all 1/√(pq).
fn weak_pair_type(t: &OverlapTable<f64>, p: usize, q: usize) -> u8 {
    let count = |v: f64| t.values().iter().filter(|&&x| (x - v).abs() < TOL).count();
    let zeros = count(0.0);
    let (fp, fq) = (p as f64, q as f64);
    if count(fq.sqrt().recip()) == q * q * p && zeros == q * q * p * (p - 1) {
        1
    } else if count(fp.sqrt().recip()) == p * p * q && zeros == p * p * q * (q - 1) {
        2
    } else if count((fp * fq).sqrt().recip()) == p * p * q * q {
        3
    } else {
        0
    }
}

fn c6() -> Checks {
    let mut c = Checks::default();
    for (p, q) in [(2usize, 3usize), (3, 5), (2, 5)] {
        let set = weak_mubs::<f64>(p, q).unwrap();
        let r = (p + 1) * (q + 1);
        c.check(
            format!("({p},{q}): {r} bases in d={}", p * q),
            set.len() == r && set.dim() == p * q,
            format!("{} bases", set.len()),
        );
        let mut counts = [0usize; 4];
        for (_, t) in pair_tables(&set) {
            counts[weak_pair_type(&t, p, q) as usize] += 1;
        }
        let want = [0, r * q / 2, r * p / 2, r * p * q / 2];
        c.check(format!("({p},{q}): pair-type census {:?}", &want[1..]), counts == want, format!("got {:?}", counts));
        for t in [2.0, 3.0, 4.0] {
            let (fp, fq) = (p as f64, q as f64);
            let closed = fp * fq * (fp.powf(2.0 - t) + fq.powf(2.0 - t) + fp.powf(2.0 - t) * fq.powf(2.0 - t))
                / (fp + fq + fp * fq);
            c.close(format!("({p},{q}): Ω_{t}"), set_t_coherence(&set, t).unwrap(), closed, TOL);
        }
    }
    c
}

fn c7() -> Checks {
    let mut c = Checks::default();
    for q in [7usize, 11] {
        let design = q2_minus_1_design(q).unwrap();
        let flat = paley_hadamard::<f64>(q).unwrap();
        let res = rbd_to_bases_with(&design, &flat).unwrap();
        let set = &res.basis_set;
        let (d, qf) = (q * q - 1, q as f64);
        let df = d as f64;
        c.check(
            format!("q={q}: {} real bases in d={d} via {}", q + 1, flat.recipe()),
            set.len() == q + 1 && set.dim() == d && res.is_real && flat.recipe().starts_with("paley"),
            format!("{} bases, d={}, real={}", set.len(), set.dim(), res.is_real),
        );
        let delta = delta_spectrum(set, CLUSTER).unwrap();
        let want = [0.0, 1.0 / (qf + 1.0), 2.0 / (qf + 1.0)];
        c.check(format!("q={q}: Δ = {{0, 1/(q+1), 2/(q+1)}}"), same_spectrum(&delta, &want), fmt(&delta));
        let beta = classify_set(set, CLUSTER).unwrap().beta;
        c.close(format!("q={q}: β = 2√((q−1)/(q+1))"), beta, 2.0 * ((qf - 1.0) / (qf + 1.0)).sqrt(), TOL);
        let s_o = 2.0 / df * (1.0 - qf / df.sqrt() + 1.0 / (2.0 * (qf + 1.0)));
        let delta_b = 4.0 / (df * df.sqrt()) * (1.0 - ((qf - 1.0) / (qf + 1.0)).sqrt());
        let (lo, hi) = pair_tables(set).iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), (_, t)| {
            let s2 = sigma_table(t).powi(2);
            (lo.min(s2), hi.max(s2))
        });
        c.check(
            format!("q={q}: σ² ∈ [σ_o², σ_o²+δ] on every pair"),
            lo >= s_o - TOL && hi <= s_o + delta_b + TOL,
            format!("σ² ∈ [{lo:.6}, {hi:.6}], interval [{s_o:.6}, {:.6}]", s_o + delta_b),
        );
        let stated = BTreeMap::from([(1usize, q - 2), (2usize, 1usize)]);
        let got = uniform_partner_pattern(&design);
        c.check(
            format!("q={q}: one 2-intersection partner and q−2 1-intersection partners per class"),
            got.as_ref() == Some(&stated),
            format!("partner pattern {got:?}; blocks of size q+1 partition each class, so sizes sum to q+1"),
        );
    }
    c
}

fn c8() -> Checks {
    let mut c = Checks::default();
    let res = rbd_to_bases::<f64>(&kirkman_kts15(), HadamardMode::Complex).unwrap();
    let set = &res.basis_set;
    c.check("7 bases, d = 15", set.len() == 7 && set.dim() == 15, format!("{} bases, d={}", set.len(), set.dim()));
    let delta = delta_spectrum(set, CLUSTER).unwrap();
    c.check("Δ = {0, 1/3}", same_spectrum(&delta, &[0.0, 1.0 / 3.0]), fmt(&delta));
    let beta = classify_set(set, CLUSTER).unwrap().beta;
    c.close("β = √(7/3)", beta, (7.0f64 / 3.0).sqrt(), TOL);
    c.close("ε = 0.8", sparsity(set), 0.8, TOL);
    c.close("D̄² = 20/21", asd_set(set).unwrap(), 20.0 / 21.0, TOL);
    c
}

fn c9() -> Checks {
    let mut c = Checks::default();
    c.check("R_raw(2,2) = 0.5", raw_key_rate(2, 2).unwrap() == 0.5, format!("{}", raw_key_rate(2, 2).unwrap()));
    c.check("E(2,2) = 0.25", mub_sift_error(2, 2).unwrap() == 0.25, format!("{}", mub_sift_error(2, 2).unwrap()));
    c.close("E(2,3) = 1/3", mub_sift_error(2, 3).unwrap(), 1.0 / 3.0, 1e-15);

    let six = prime_mubs::<f64>(2).unwrap();
    let bb84 = six.truncated(2).unwrap();
    let trials = 100_000;
    for (name, set, closed) in [("BB84", &bb84, 0.25), ("six-state", &six, 1.0 / 3.0)] {
        let mc = intercept_resend_sift_error(set, trials, 42).unwrap();
        let ok = (mc.sift_error - closed).abs() <= 3.0 * mc.std_error;
        c.check(
            format!("{name}: Monte Carlo within 3 s.e. of closed form"),
            ok,
            format!("{:.5} ± {:.5} vs {closed:.5}", mc.sift_error, mc.std_error),
        );
    }
    let small: Vec<(&str, BasisSet<f64>)> = vec![
        ("BB84", bb84.clone()),
        ("six-state", six.clone()),
        ("prime(3)", prime_mubs(3).unwrap()),
        ("prime(5)", prime_mubs(5).unwrap()),
        ("weak(2,3)", weak_mubs(2, 3).unwrap()),
    ];
    for (i, (name, set)) in small.iter().enumerate() {
        let ex = exhaustive_sift_error(set).unwrap();
        let mc = intercept_resend_sift_error(set, trials, 1000 + i as u64).unwrap();
        c.check(
            format!("{name}: exhaustive oracle within 3 s.e. of Monte Carlo"),
            (mc.sift_error - ex.sift_error).abs() <= 3.0 * mc.std_error,
            format!("{:.5} ± {:.5} vs {:.5}", mc.sift_error, mc.std_error, ex.sift_error),
        );
    }
    let ex = exhaustive_sift_error(&six).unwrap();
    c.close("six-state: exhaustive oracle = closed form", ex.sift_error, 1.0 / 3.0, 1e-15);
    c
}

fn c10(sets: &[(String, BasisSet<f64>)]) -> Checks {
    let mut c = Checks::default();
    for (si, (name, set)) in sets.iter().enumerate() {
        let d = set.dim();
        let mut r = rng(10_000 + si as u64);
        let states: Vec<CVector<f64>> = (0..1000).map(|_| random_state(d, &mut r)).collect();
        // entropies[state][basis]
        let entropies: Vec<Vec<f64>> =
            states.par_iter().map(|s| set.bases().iter().map(|b| outcome_entropy(s, b).unwrap()).collect()).collect();
        let mut worst = f64::INFINITY;
        let mut mub_worst = f64::INFINITY;
        let half_log = 0.5 * (d as f64).log2();
        for (l, m) in set.pairs() {
            let bound = maassen_uffink_bound(&set.bases()[l], &set.bases()[m]).unwrap();
            let is_mub = (bound - half_log).abs() <= TOL;
            for h in &entropies {
                let avg = 0.5 * (h[l] + h[m]);
                worst = worst.min(avg - bound);
                if is_mub {
                    mub_worst = mub_worst.min(avg - half_log);
                }
            }
        }
        c.check(
            format!("{name}: 1000 states × every pair above the bound"),
            worst >= -1e-12,
            format!("worst margin {worst:.3e}"),
        );
        if mub_worst.is_finite() {
            c.check(
                format!("{name}: MUB pairs average ≥ ½ log₂ d"),
                mub_worst >= -1e-12,
                format!("worst margin {mub_worst:.3e}"),
            );
        }
    }
    c
}

fn c11(sets: &[(String, BasisSet<f64>)]) -> Checks {
    let mut c = Checks::default();
    let mut r = rng(11);
    let mut err = 0.0f64;
    for n in 0..1000 {
        let d = 2 + n % 15;
        let (u, v) = (random_state::<f64, _>(d, &mut r), random_state::<f64, _>(d, &mut r));
        err = err.max((traceless_dot(&u, &v).unwrap() - traceless_dot_explicit(&u, &v).unwrap()).abs());
    }
    c.check("1000 random pairs: closed form = ½Tr(m₁m₂)", err <= 1e-12, format!("max |err| {err:.2e}"));
    let mut r = rng(12);
    let mut random_sets = Vec::new();
    for d in [2, 3, 4, 6, 9, 16] {
        let (a, b) = random_pair(d, &mut r);
        random_sets.push((format!("random d={d}"), BasisSet::new("random", vec![a.clone(), b, a]).unwrap()));
    }
    for (name, set) in sets.iter().chain(random_sets.iter()) {
        let d = set.dim() as f64;
        // the explicit form is O(d⁴) per pair; cap the pairs for the big sets
        let cap = if set.dim() > 16 { 3 } else { usize::MAX };
        let (mut g_err, mut d_err) = (0.0f64, 0.0f64);
        for (l, m) in set.pairs().into_iter().take(cap) {
            let (a, b) = (&set.bases()[l], &set.bases()[m]);
            let t = overlap_table(a, b).unwrap();
            let g = gamma_squared_table(&t);
            g_err = g_err.max((g - gamma_squared_geometric(a, b).unwrap()).abs());
            d_err = d_err.max((bengtsson_table(&t) - (1.0 - g / (d - 1.0))).abs());
        }
        c.check(
            format!("{name}: γ² = 4Σ(m·m)² and D² = 1 − γ²/(d−1)"),
            g_err <= 1e-12 && d_err <= 1e-12,
            format!("max |err| {g_err:.2e}, {d_err:.2e}"),
        );
    }
    c
}

fn c12(sets: &[(String, BasisSet<f64>)]) -> Checks {
    let mut c = Checks::default();
    for p in [2, 3, 5] {
        let dd = design_defect(&prime_mubs::<f64>(p).unwrap().all_vectors(), 2).unwrap();
        c.check(
            format!("complete MUB set d={p}: defect 0"),
            dd.defect.abs() <= TOL,
            format!("defect {:.2e}, Φ₂·D = {:.12}", dd.defect, dd.ratio),
        );
    }
    let mut r = rng(13);
    let mut singles: Vec<Basis<f64>> = (2..=16).map(Basis::canonical).collect();
    singles.extend((2..=16).map(|d| random_basis(d, &mut r)));
    singles.extend(sets.iter().flat_map(|(_, s)| s.bases().iter().cloned()));
    let min = singles.iter().map(|b| design_defect(b.vectors(), 2).unwrap().defect).fold(f64::INFINITY, f64::min);
    c.check(
        format!("{} single bases: defect > 0 at t=2", singles.len()),
        min > TOL,
        format!("smallest defect {min:.3e}"),
    );
    c
}

fn c13() -> Checks {
    let mut c = Checks::default();
    for p in [2, 3, 5, 7] {
        let set = prime_mubs::<f64>(p).unwrap();
        let approx = log_volume_ratio_approx(&set).unwrap();
        c.check(format!("d={p}: approximate log-volume ratio = 0"), approx.abs() <= TOL, format!("{approx:.2e}"));
        let cross = gram_matrix(&set).unwrap().max_cross_block();
        c.check(format!("d={p}: Gram cross-basis blocks vanish"), cross <= TOL, format!("max |entry| {cross:.2e}"));
    }
    for d in [3, 5] {
        let mub = gram_log_volume(&prime_mubs::<f64>(d).unwrap()).unwrap();
        let mut r = rng(14 + d as u64);
        let mut best = f64::NEG_INFINITY;
        for _ in 0..20 {
            let bases = (0..=d).map(|_| random_basis(d, &mut r)).collect();
            best = best.max(gram_log_volume(&BasisSet::new("random", bases).unwrap()).unwrap());
        }
        c.check(
            format!("d={d}: MUB Gram log-volume exceeds 20 random sets"),
            mub > best,
            format!("MUB {mub:.6}, best random {best:.6}"),
        );
    }
    c
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Checks + 'a>);

fn main() -> ExitCode {
    let start = Instant::now();
    let sets = constructed();
    let criteria: Vec<Criterion> = vec![
        ("exact MUB suite", Box::new(c1)),
        ("power-sum bounds", Box::new(c2)),
        ("σ ≤ τ and distance sandwich", Box::new(|| c3(&sets))),
        ("APMUB closed forms", Box::new(c4)),
        ("APMUB census", Box::new(c5)),
        ("weak MUBs", Box::new(c6)),
        ("q²−1 construction", Box::new(c7)),
        ("Kirkman triple system construction", Box::new(c8)),
        ("QKD rates and sifted error", Box::new(c9)),
        ("entropic uncertainty", Box::new(|| c10(&sets))),
        ("geometric equivalence", Box::new(|| c11(&sets))),
        ("projective 2-design", Box::new(|| c12(&sets))),
        ("volume", Box::new(c13)),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let checks = run().0;
        let bad: Vec<&Sub> = checks.iter().filter(|s| !s.ok).collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {:>2}: {title} ({}/{} checks, {:.2}s)",
            i + 1,
            checks.len() - bad.len(),
            checks.len(),
            t0.elapsed().as_secs_f64()
        );
        for s in &bad {
            println!("         ✗ {} — {}", s.name, s.detail);
        }
        if !bad.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
