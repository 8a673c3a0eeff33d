use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use mubkit::algebra::HadamardMode;
use mubkit::apps::{exhaustive_sift_error, intercept_resend_sift_error, mub_sift_error, raw_key_rate, QkdOutcome};
use mubkit::constructors::{classify_set, prime_mubs, rbd_to_bases, weak_mubs, SetLabel};
use mubkit::designs::{kirkman_kts15, q2_minus_1_design, resolvable_transversal_design, ResolvableDesign};
use mubkit::io::{basis_set_from_value, basis_set_to_value};
use mubkit::measures::{measure_set, sparsity, MeasureOptions};
use mubkit::verify::verify_set;
use mubkit::{BasisSet, Real};
use serde::Serialize;
use serde_json::json;

use crate::config::{tool, ConstructionParams, RunConfig};
use crate::error::CliError;
use crate::{Cli, Command, ConstructArgs, FlatArgs, Kind, MeasureArgs, QkdArgs, VerifyArgs};

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<ExitCode> {
    match &cli.command {
        Command::Construct(a) => construct(a, &cli.out_dir),
        Command::Measure(a) => measure(a, &cli.out_dir),
        Command::Verify(a) => verify(a, &cli.out_dir),
        Command::Qkd(a) => qkd(a, &cli.out_dir),
    }
}

fn require(v: Option<usize>, flag: &str, kind: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--kind {kind} requires --{flag}")))
}

fn hadamard_mode(f: &FlatArgs) -> HadamardMode {
    if f.strict_real {
        HadamardMode::RequireReal
    } else if f.complex {
        HadamardMode::Complex
    } else {
        HadamardMode::PreferReal
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::MubPrime => "mub-prime",
        Kind::Weak => "weak",
        Kind::Rtd => "rtd",
        Kind::Q2m1 => "q2m1",
        Kind::Kts15 => "kts15",
        Kind::FromDesignFile => "from-design-file",
    }
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| CliError::Write { path: parent.into(), source })?;
    }
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.into(), source })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })
}

/// Loads a bare basis-set document or one wrapped by `construct`.
fn load_set(path: &Path) -> CliResult<BasisSet> {
    let text = read(path)?;
    let input_err = |source: mubkit::Error| CliError::Input { path: path.into(), source };
    let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| input_err(e.into()))?;
    let inner = match value.get_mut("basis_set") {
        Some(v) => v.take(),
        None => value,
    };
    basis_set_from_value(inner).map_err(input_err)
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into())
}

fn fmt_list(v: &[f64]) -> String {
    let items: Vec<String> = v.iter().map(|x| format!("{x:.6}")).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Serialize)]
struct ConstructSummary {
    d: usize,
    r: usize,
    label: Option<SetLabel>,
    beta: Option<f64>,
    delta: Option<Vec<f64>>,
    sparsity: f64,
    predicted_beta: Option<f64>,
    predicted_delta: Option<Vec<f64>>,
    is_real: bool,
    flat: Option<String>,
}

fn construct(a: &ConstructArgs, out_dir: &Path) -> CliResult<ExitCode> {
    let kind = kind_name(a.kind);
    let mode = hadamard_mode(&a.flat);
    let rbd = |design: &ResolvableDesign| rbd_to_bases::<f64>(design, mode);
    let (set, predicted, name) = match a.kind {
        Kind::MubPrime => {
            let p = require(a.p, "p", kind)?;
            (prime_mubs::<f64>(p)?, None, format!("mub-prime-p{p}"))
        }
        Kind::Weak => {
            let (p, q) = (require(a.p, "p", kind)?, require(a.q, "q", kind)?);
            (weak_mubs::<f64>(p, q)?, None, format!("weak-p{p}-q{q}"))
        }
        Kind::Rtd => {
            let (k, s) = (require(a.k, "k", kind)?, require(a.s, "s", kind)?);
            let res = rbd(&resolvable_transversal_design(k, s)?)?;
            (res.basis_set.clone(), Some(res), format!("rtd-k{k}-s{s}"))
        }
        Kind::Q2m1 => {
            let q = require(a.q, "q", kind)?;
            let res = rbd(&q2_minus_1_design(q)?)?;
            (res.basis_set.clone(), Some(res), format!("q2m1-q{q}"))
        }
        Kind::Kts15 => {
            let res = rbd(&kirkman_kts15())?;
            (res.basis_set.clone(), Some(res), "kts15".to_string())
        }
        Kind::FromDesignFile => {
            let path = a.design.as_ref().ok_or_else(|| CliError::Usage(format!("--kind {kind} requires --design")))?;
            let design = ResolvableDesign::from_json(&read(path)?)
                .map_err(|source| CliError::Input { path: path.clone(), source })?;
            let res = rbd(&design)?;
            (res.basis_set.clone(), Some(res), format!("design-{}", stem(path)))
        }
    };

    let output = a.output.clone().unwrap_or_else(|| out_dir.join(format!("{name}.json")));
    let hadamard = match mode {
        HadamardMode::PreferReal => "prefer-real",
        HadamardMode::RequireReal => "strict-real",
        HadamardMode::Complex => "complex",
    };
    let config = RunConfig {
        command: "construct".into(),
        construction: Some(ConstructionParams {
            kind: kind.into(),
            p: a.p,
            q: a.q,
            k: a.k,
            s: a.s,
            design: a.design.clone(),
            hadamard: hadamard.into(),
        }),
        outputs: vec![output.clone()],
        cluster_tol: Some(f64::cluster_tol()),
        ..RunConfig::default()
    };

    let cls = if set.len() >= 2 { Some(classify_set(&set, f64::cluster_tol())?) } else { None };
    let summary = ConstructSummary {
        d: set.dim(),
        r: set.len(),
        label: cls.as_ref().map(|c| c.label),
        beta: cls.as_ref().map(|c| c.beta),
        delta: cls.as_ref().map(|c| c.delta.clone()),
        sparsity: sparsity(&set),
        predicted_beta: predicted.as_ref().map(|p| p.predicted_beta),
        predicted_delta: predicted.as_ref().map(|p| p.predicted_delta.clone()),
        is_real: predicted
            .as_ref()
            .map_or(set.all_vectors().iter().all(|v| v.amplitudes().iter().all(|c| c.im == 0.0)), |p| p.is_real),
        flat: predicted.as_ref().map(|p| p.flat_kind.to_string()),
    };
    let doc = json!({
        "tool": tool(),
        "config": config,
        "summary": summary,
        "basis_set": basis_set_to_value(&set)?,
    });
    write(&output, &serde_json::to_string_pretty(&doc)?)?;

    println!("provenance: {}", set.provenance());
    println!("d = {}, bases = {}", summary.d, summary.r);
    if let Some(c) = &cls {
        println!("label: {}", c.label);
        println!("beta = {:.6}", c.beta);
        println!("delta = {}", fmt_list(&c.delta));
    }
    if let Some(p) = &predicted {
        println!("predicted beta = {:.6} (mu = {}, flat = {})", p.predicted_beta, p.mu, p.flat_kind);
    }
    println!("sparsity = {:.6}", summary.sparsity);
    println!("wrote {}", output.display());
    Ok(ExitCode::SUCCESS)
}

fn measure(a: &MeasureArgs, out_dir: &Path) -> CliResult<ExitCode> {
    let set = load_set(&a.input)?;
    let json_path = a.output.clone().unwrap_or_else(|| out_dir.join(format!("{}.measures.json", stem(&a.input))));
    let csv_path = json_path.with_extension("csv");
    let opts = MeasureOptions {
        t_values: a.t_values.clone(),
        frame_orders: a.frame_orders.clone(),
        cluster_tol: a.cluster_tol,
        volume: !a.no_volume,
    };
    let report = measure_set(&set, &opts)?;
    let config = RunConfig {
        command: "measure".into(),
        input: Some(a.input.clone()),
        outputs: vec![json_path.clone(), csv_path.clone()],
        cluster_tol: Some(a.cluster_tol),
        t_values: a.t_values.clone(),
        frame_orders: a.frame_orders.clone(),
        volume: Some(!a.no_volume),
        ..RunConfig::default()
    };
    let header = json!({ "tool": tool(), "config": config });
    let doc = json!({ "tool": tool(), "config": config, "report": report });
    write(&json_path, &serde_json::to_string_pretty(&doc)?)?;
    write(&csv_path, &format!("# {}\n{}", serde_json::to_string(&header)?, report.to_csv()))?;

    println!("d = {}, bases = {}", report.d, report.r);
    let show = |name: &str, v: Option<f64>| match v {
        Some(x) => println!("{name} = {x:.9}"),
        None => println!("{name} = n/a"),
    };
    show("omega_2", report.omega_t.as_ref().and_then(|v| v.iter().find(|e| e.t == 2.0)).map(|e| e.value));
    show("tau", report.tau);
    show("sigma", report.sigma);
    show("asd", report.asd);
    show("d2_max", report.d_squared_max);
    println!("sparsity = {:.9}", report.sparsity);
    if let Some(c) = &report.classification {
        println!("label: {} (beta = {:.6})", c.label, c.beta);
    }
    println!("wrote {} and {}", json_path.display(), csv_path.display());
    Ok(ExitCode::SUCCESS)
}

fn verify(a: &VerifyArgs, out_dir: &Path) -> CliResult<ExitCode> {
    let set = load_set(&a.input)?;
    let output = a.output.clone().unwrap_or_else(|| out_dir.join(format!("{}.verify.json", stem(&a.input))));
    let report = verify_set(&set, a.tol);
    let config = RunConfig {
        command: "verify".into(),
        input: Some(a.input.clone()),
        outputs: vec![output.clone()],
        tol: Some(a.tol),
        ..RunConfig::default()
    };
    let doc = json!({ "tool": tool(), "config": config, "report": report });
    write(&output, &serde_json::to_string_pretty(&doc)?)?;

    for c in &report.checks {
        println!("{} {} (worst margin {:.3e})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.worst_margin);
        for v in &c.violations {
            println!("    ({}, {}) margin {:.3e}: {}", v.l, v.m, v.margin, v.detail);
        }
    }
    println!("wrote {}", output.display());
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn qkd(a: &QkdArgs, out_dir: &Path) -> CliResult<ExitCode> {
    let full = load_set(&a.input)?;
    let set = match a.bases {
        Some(n) if n < 2 || n > full.len() => {
            return Err(CliError::Usage(format!("--bases must be in 2..={}, got {n}", full.len())))
        }
        Some(n) => full.truncated(n)?,
        None => full,
    };
    let output: PathBuf = a.output.clone().unwrap_or_else(|| out_dir.join(format!("{}.qkd.json", stem(&a.input))));
    let (d, k) = (set.dim(), set.len());
    let mc = intercept_resend_sift_error(&set, a.trials, a.seed)?;
    let exhaustive = exhaustive_sift_error(&set)?;
    let is_mub = classify_set(&set, f64::cluster_tol())?.label == SetLabel::Mub;
    let closed = if is_mub {
        Some(QkdOutcome {
            raw_rate: raw_key_rate(d, k)?,
            sift_error: mub_sift_error(d, k)?,
            trials: 0,
            std_error: 0.0,
            seed: a.seed,
        })
    } else {
        None
    };
    let config = RunConfig {
        command: "qkd".into(),
        input: Some(a.input.clone()),
        outputs: vec![output.clone()],
        bases: a.bases,
        trials: Some(a.trials),
        seed: Some(a.seed),
        ..RunConfig::default()
    };
    let doc = json!({
        "tool": tool(),
        "config": config,
        "d": d,
        "bases": k,
        "closed_form": closed,
        "monte_carlo": mc,
        "exhaustive": exhaustive,
    });
    write(&output, &serde_json::to_string_pretty(&doc)?)?;

    println!("d = {d}, bases = {k}");
    println!("raw rate = {:.6} bits", mc.raw_rate);
    if let Some(c) = closed {
        println!("closed-form sift error = {:.6}", c.sift_error);
    }
    println!("exhaustive sift error = {:.6}", exhaustive.sift_error);
    println!(
        "monte carlo sift error = {:.6} ± {:.6} ({} trials, seed {})",
        mc.sift_error, mc.std_error, mc.trials, mc.seed
    );
    println!("wrote {}", output.display());
    Ok(ExitCode::SUCCESS)
}
