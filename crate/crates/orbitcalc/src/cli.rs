//! Batch-verification surface: named checks over an algebra and weight,
//! with text or JSON reports.
//!
//! The JSON report schema is stable: top-level keys `config`, `results`,
//! `residuals`, `verdict`, `version`. Every residual is a finite
//! nonnegative number. Exit-code policy for the binary: 0 when the
//! verdict passes, 1 when it fails, 2 for usage or configuration errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{check_algebra, LieAlgebra};
use crate::calculus::{verify_main_theorem_on, CotangentReport};
use crate::error::{Error, Result};
use crate::irrep::{build_irrep, HighestWeight, Irrep};
use crate::linalg;
use crate::oracles;
use crate::orbit::{momentum, orbit_data, verify_struk, RootClass};
use crate::roots::{compute_roots, find_cartan, RootDatum};
use crate::tol::Tol;

/// The individually runnable checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Roots,
    Triples,
    Irrep,
    Orbit,
    Struk,
    Cotangent,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Roots,
        CheckKind::Triples,
        CheckKind::Irrep,
        CheckKind::Orbit,
        CheckKind::Struk,
        CheckKind::Cotangent,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::Roots => "roots",
            CheckKind::Triples => "triples",
            CheckKind::Irrep => "irrep",
            CheckKind::Orbit => "orbit",
            CheckKind::Struk => "struk",
            CheckKind::Cotangent => "cotangent",
        }
    }

    /// Whether the check needs a highest weight.
    pub fn needs_weight(&self) -> bool {
        !matches!(self, CheckKind::Roots | CheckKind::Triples)
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "roots" => Ok(CheckKind::Roots),
            "triples" => Ok(CheckKind::Triples),
            "irrep" => Ok(CheckKind::Irrep),
            "orbit" => Ok(CheckKind::Orbit),
            "struk" => Ok(CheckKind::Struk),
            "cotangent" => Ok(CheckKind::Cotangent),
            other => Err(Error::Usage(format!(
                "unknown check {other:?}; expected one of roots, triples, irrep, orbit, struk, cotangent"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!(
                "unknown format {other:?}; expected text or json"
            ))),
        }
    }
}

/// Configuration for one run: the algebra (built-in name like `su3` or
/// `su2+su2`, or a path to an algebra spec JSON), the weight labels, the
/// checks to run, and the output destination / format.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algebra: String,
    pub weight: Vec<i64>,
    pub checks: Vec<CheckKind>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(algebra: impl Into<String>, weight: Vec<i64>) -> Self {
        RunConfig {
            algebra: algebra.into(),
            weight,
            checks: Vec::new(),
            output: None,
            format: OutputFormat::Text,
        }
    }
}

/// Accumulated report of a run.
#[derive(Debug, Clone)]
pub struct Report {
    pub config: Value,
    pub results: serde_json::Map<String, Value>,
    pub residuals: BTreeMap<String, f64>,
    pub verdict: bool,
    lines: Vec<String>,
}

impl Report {
    fn new(config: Value) -> Self {
        Report {
            config,
            results: serde_json::Map::new(),
            residuals: BTreeMap::new(),
            verdict: true,
            lines: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn residual(&mut self, name: &str, value: f64) {
        debug_assert!(value.is_finite());
        self.residuals.insert(name.to_string(), value.max(0.0));
    }

    pub fn to_json(&self) -> Value {
        json!({
            "config": self.config,
            "results": Value::Object(self.results.clone()),
            "residuals": self.residuals,
            "verdict": if self.verdict { "pass" } else { "fail" },
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report json");
                s.push('\n');
                s
            }
            OutputFormat::Text => {
                let mut s = String::new();
                for line in &self.lines {
                    let _ = writeln!(s, "{line}");
                }
                let _ = writeln!(s, "verdict: {}", if self.verdict { "pass" } else { "fail" });
                s
            }
        }
    }

    /// Write to the configured destination (stdout when none).
    pub fn write(&self, cfg: &RunConfig) -> Result<()> {
        let text = self.render(cfg.format);
        match &cfg.output {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn config_echo(cfg: &RunConfig, checks: &[CheckKind]) -> Value {
    json!({
        "algebra": cfg.algebra,
        "weight": cfg.weight,
        "checks": checks.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "format": match cfg.format { OutputFormat::Text => "text", OutputFormat::Json => "json" },
        "output": cfg.output.as_ref().map(|p| p.display().to_string()),
    })
}

/// Load a built-in algebra by name or an algebra spec from a JSON file.
/// The algebra must pass its own diagnostic report.
pub fn load_algebra(source: &str) -> Result<LieAlgebra> {
    let algebra = if source.ends_with(".json") || std::path::Path::new(source).exists() {
        let text = std::fs::read_to_string(source)?;
        LieAlgebra::from_spec_json(&text)?
    } else {
        LieAlgebra::by_name(source)?
    };
    let diag = check_algebra(&algebra);
    if !diag.passed() {
        let failed: Vec<&str> = diag
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        return Err(Error::InvalidAlgebra(format!(
            "algebra {:?} fails invariant checks: {}",
            source,
            failed.join(", ")
        )));
    }
    Ok(algebra)
}

struct Pipeline {
    algebra: LieAlgebra,
    datum: RootDatum,
    irrep: Option<Irrep>,
}

impl Pipeline {
    fn start(cfg: &RunConfig) -> Result<Self> {
        let algebra = load_algebra(&cfg.algebra)?;
        let cartan = find_cartan(&algebra, None)?;
        let datum = compute_roots(&algebra, &cartan)?;
        Ok(Pipeline {
            algebra,
            datum,
            irrep: None,
        })
    }

    fn weight(&self, cfg: &RunConfig) -> Result<HighestWeight> {
        if cfg.weight.len() != self.datum.rank() {
            return Err(Error::Usage(format!(
                "weight has {} labels but the algebra has rank {}",
                cfg.weight.len(),
                self.datum.rank()
            )));
        }
        HighestWeight::new(cfg.weight.clone())
            .map_err(|e| Error::Usage(format!("invalid weight: {e}")))
    }

    fn irrep(&mut self, cfg: &RunConfig) -> Result<&Irrep> {
        if self.irrep.is_none() {
            let hw = self.weight(cfg)?;
            self.irrep = Some(build_irrep(&self.algebra, &self.datum, &hw)?);
        }
        Ok(self.irrep.as_ref().unwrap())
    }
}

fn run_roots_check(p: &Pipeline, report: &mut Report) -> Result<bool> {
    let rd = &p.datum;
    let cm = rd.cartan_matrix()?;
    let oracle_count = oracles::root_count_from_cartan_matrix(&cm);
    let count = rd.roots.len();
    let pass = count == oracle_count && rd.simples.len() == rd.rank();
    report.results.insert(
        "roots".into(),
        json!({
            "count": count,
            "positives": rd.positives.len(),
            "simples": rd.simples.len(),
            "rank": rd.rank(),
            "oracle_count": oracle_count,
            "cartan_matrix": cm,
            "pass": pass,
        }),
    );
    report.note(format!(
        "roots: |Delta| = {count} (oracle {oracle_count}), |Delta+| = {}, |S| = {}, rank {} ... {}",
        rd.positives.len(),
        rd.simples.len(),
        rd.rank(),
        if pass { "ok" } else { "FAIL" }
    ));
    Ok(pass)
}

fn run_triples_check(p: &Pipeline, report: &mut Report) -> Result<bool> {
    let tol = Tol::global();
    let rd = &p.datum;
    let alg = &p.algebra;
    let mut max_res = 0.0_f64;
    for t in rd.triples() {
        let two = nalgebra::Complex::new(2.0, 0.0);
        let r1 = alg.bracket(&t.h, &t.e)?.sub(&t.e.scale(two)).norm();
        let r2 = alg.bracket(&t.h, &t.f)?.add(&t.f.scale(two)).norm();
        let r3 = alg.bracket(&t.e, &t.f)?.sub(&t.h).norm();
        max_res = max_res.max(r1).max(r2).max(r3);
    }
    let pass = max_res < tol.residual;
    report.residual("triples_max_residual", max_res);
    report.results.insert(
        "triples".into(),
        json!({ "count": rd.positives.len(), "max_residual": max_res, "pass": pass }),
    );
    report.note(format!(
        "triples: {} normalized, max identity residual {max_res:.2e} ... {}",
        rd.positives.len(),
        if pass { "ok" } else { "FAIL" }
    ));
    Ok(pass)
}

fn run_irrep_check(p: &mut Pipeline, cfg: &RunConfig, report: &mut Report) -> Result<bool> {
    let tol = Tol::global();
    let hw = p.weight(cfg)?;
    let oracle_dim = oracles::weyl_dimension(&p.datum, &hw)? as usize;
    let oracle_table = oracles::freudenthal_multiplicities(&p.datum, &hw)?;
    p.irrep(cfg)?;
    let irrep = p.irrep.as_ref().unwrap();
    let rd = &p.datum;

    let dim = irrep.dim();
    let mut weights_json = Vec::new();
    let mut mults_match = true;
    let mut seen_total = 0usize;
    for ws in &irrep.weights {
        let labels_f = rd.weight_labels(&ws.coords);
        let labels: Vec<i64> = labels_f.iter().map(|v| v.round() as i64).collect();
        let oracle_mult = oracle_table.multiplicity_of(&labels);
        let mult = ws.multiplicity();
        seen_total += mult;
        if oracle_mult != mult {
            mults_match = false;
        }
        weights_json.push(json!({
            "labels": labels,
            "multiplicity": mult,
            "oracle_multiplicity": oracle_mult,
        }));
    }
    let mut unitarity = 0.0_f64;
    for m in irrep.matrices() {
        unitarity = unitarity.max(linalg::opnorm(&(m + m.adjoint())));
    }
    // Highest-weight space: joint kernel of the simple raising operators.
    let spos = rd.simple_positions();
    let n = irrep.dim();
    let mut ann = linalg::CMatrix::zeros(spos.len() * n, n);
    for (s, &pp) in spos.iter().enumerate() {
        ann.view_mut((s * n, 0), (n, n))
            .copy_from(&irrep.of_element(&rd.triple(pp).e));
    }
    let hw_space_dim = if spos.is_empty() {
        n
    } else {
        linalg::complex_kernel(&ann, tol).len()
    };

    let pass = dim == oracle_dim
        && mults_match
        && seen_total == dim
        && unitarity < tol.residual
        && hw_space_dim == 1;
    report.residual("irrep_unitarity", unitarity);
    report.results.insert(
        "irrep".into(),
        json!({
            "weight": hw.dynkin_labels,
            "dim": dim,
            "oracle_dim": oracle_dim,
            "weights": weights_json,
            "highest_weight_space_dim": hw_space_dim,
            "pass": pass,
        }),
    );
    report.note(format!(
        "irrep {hw}: dim {dim} (oracle {oracle_dim}), multiplicities {}, highest-weight space dim {hw_space_dim}, unitarity {unitarity:.2e} ... {}",
        if mults_match { "match" } else { "MISMATCH" },
        if pass { "ok" } else { "FAIL" }
    ));
    Ok(pass)
}

fn run_orbit_check(p: &mut Pipeline, cfg: &RunConfig, report: &mut Report) -> Result<bool> {
    let hw = p.weight(cfg)?;
    p.irrep(cfg)?;
    let irrep = p.irrep.as_ref().unwrap();
    let rd = &p.datum;
    let lambda = momentum(irrep)?;

    // Dominance: i l(H) equals the label on the simple roots and the
    // squared norm of the lowered highest vector on every positive root.
    let mut label_residual = 0.0_f64;
    for (i, &sp) in rd.simple_positions().iter().enumerate() {
        let v = lambda.dynkin_value(&rd.triple(sp).h);
        label_residual = label_residual.max((v - hw.dynkin_labels[i] as f64).abs());
    }
    let mut fnorm_residual = 0.0_f64;
    let mut pairings = Vec::new();
    for pp in 0..rd.positives.len() {
        let t = rd.triple(pp);
        let v = lambda.dynkin_value(&t.h);
        let f_xi = irrep.of_element(&t.f) * &irrep.highest_vector;
        fnorm_residual = fnorm_residual.max((v - f_xi.norm_squared()).abs());
        pairings.push(json!({
            "pairing": v,
            "f_norm_squared": f_xi.norm_squared(),
        }));
    }

    let (lambda, od) = orbit_data(&p.algebra, rd, irrep)?;
    let z = &od.z_diamond;
    let pass = label_residual < 1e-7 && fnorm_residual < 1e-7;
    report.residual("momentum_label_residual", label_residual);
    report.residual("momentum_fnorm_residual", fnorm_residual);
    report.results.insert(
        "orbit".into(),
        json!({
            "momentum": lambda.values.as_slice().to_vec(),
            "z_diamond": z.as_slice().to_vec(),
            "dim_k": od.dim_k(),
            "dim_m": od.dim_m(),
            "positive_pairings": pairings,
            "pass": pass,
        }),
    );
    report.note(format!(
        "orbit {hw}: dim k = {}, dim m = {}, label residual {label_residual:.2e}, |F xi|^2 residual {fnorm_residual:.2e} ... {}",
        od.dim_k(),
        od.dim_m(),
        if pass { "ok" } else { "FAIL" }
    ));
    Ok(pass)
}

fn run_struk_check(p: &mut Pipeline, cfg: &RunConfig, report: &mut Report) -> Result<bool> {
    p.irrep(cfg)?;
    let irrep = p.irrep.as_ref().unwrap();
    let rd = &p.datum;
    let (lambda, od) = orbit_data(&p.algebra, rd, irrep)?;
    let struk = verify_struk(&od, rd, &lambda)?;
    let stabilizer_roots = od
        .classified_roots
        .iter()
        .filter(|c| **c == RootClass::Stabilizer)
        .count();
    report.residual("struk_projector_k", struk.k_projector_distance);
    report.residual("struk_projector_m", struk.m_projector_distance);
    report.results.insert(
        "struk".into(),
        json!({
            "dim_k": struk.dim_k,
            "dim_m": struk.dim_m,
            "stabilizer_roots": stabilizer_roots,
            "k_projector_distance": struk.k_projector_distance,
            "m_projector_distance": struk.m_projector_distance,
            "memberships": struk
                .memberships
                .iter()
                .map(|m| json!({
                    "pairing": m.pairing,
                    "e_residual": m.e_residual,
                    "f_residual": m.f_residual,
                    "consistent": m.consistent,
                }))
                .collect::<Vec<_>>(),
            "pass": struk.passed,
        }),
    );
    report.note(format!(
        "stabilizer span: projector distances {:.2e} / {:.2e}, {} stabilizer root(s) ... {}",
        struk.k_projector_distance,
        struk.m_projector_distance,
        stabilizer_roots,
        if struk.passed { "ok" } else { "FAIL" }
    ));
    Ok(struk.passed)
}

fn cotangent_json(rep: &CotangentReport) -> Value {
    json!({
        "dim_g": rep.dim_g,
        "dim_g_o": rep.dim_g_o,
        "dim_g_lambda": rep.dim_g_lambda,
        "dim_q": rep.dim_q,
        "dim_bimodule": rep.dim_bimodule,
        "trivial": rep.trivial,
        "rank_stable": rep.rank_stable,
        "witnesses": rep
            .witnesses
            .iter()
            .map(|w| json!({
                "root": w.root_index,
                "family": w.family,
                "span_residual": w.span_residual,
                "structure_ok": w.structure_ok,
            }))
            .collect::<Vec<_>>(),
        "verdict": rep.verdict,
    })
}

fn run_cotangent_check(p: &mut Pipeline, cfg: &RunConfig, report: &mut Report) -> Result<bool> {
    p.irrep(cfg)?;
    let irrep = p.irrep.as_ref().unwrap().clone();
    let ct = verify_main_theorem_on(&p.algebra, &p.datum, irrep)?;
    let witness_max = ct
        .witnesses
        .iter()
        .map(|w| w.span_residual)
        .fold(0.0_f64, f64::max);
    report.residual("witness_span_max", witness_max);
    report.results.insert("cotangent".into(), cotangent_json(&ct));
    let pass = ct.verdict && ct.witnesses_ok() && ct.rank_stable;
    let bimodule_text = match ct.dim_bimodule {
        Some(d) => format!("bimodule rank {d}"),
        None => "bimodule skipped (over budget)".to_string(),
    };
    report.note(format!(
        "cotangent: dim Q = {} vs dim g_lambda = {} (dim g_o = {}), {}, {} witness row(s){} ... {}",
        ct.dim_q,
        ct.dim_g_lambda,
        ct.dim_g_o,
        bimodule_text,
        ct.witnesses.len(),
        if ct.trivial { " [trivial weight: holds vacuously]" } else { "" },
        if pass { "pass" } else { "FAIL" }
    ));
    Ok(pass)
}

fn run_checks(cfg: &RunConfig, checks: &[CheckKind]) -> Result<Report> {
    let mut report = Report::new(config_echo(cfg, checks));
    let mut pipeline = Pipeline::start(cfg)?;
    report.note(format!(
        "algebra {} (dim {}, rank {})",
        pipeline.algebra.label,
        pipeline.algebra.dim,
        pipeline.datum.rank()
    ));
    // Weight length is validated up front for any check that needs it.
    if checks.iter().any(|c| c.needs_weight()) {
        pipeline.weight(cfg)?;
    }
    let mut verdict = true;
    for check in checks {
        let pass = match check {
            CheckKind::Roots => run_roots_check(&pipeline, &mut report)?,
            CheckKind::Triples => run_triples_check(&pipeline, &mut report)?,
            CheckKind::Irrep => run_irrep_check(&mut pipeline, cfg, &mut report)?,
            CheckKind::Orbit => run_orbit_check(&mut pipeline, cfg, &mut report)?,
            CheckKind::Struk => run_struk_check(&mut pipeline, cfg, &mut report)?,
            CheckKind::Cotangent => run_cotangent_check(&mut pipeline, cfg, &mut report)?,
        };
        verdict &= pass;
    }
    report.verdict = verdict;
    Ok(report)
}

/// Root counts, simple roots, and triple residuals.
pub fn cmd_roots(cfg: &RunConfig) -> Result<Report> {
    run_checks(cfg, &[CheckKind::Roots, CheckKind::Triples])
}

/// Representation dimension and weight table against the oracles.
pub fn cmd_irrep(cfg: &RunConfig) -> Result<Report> {
    run_checks(cfg, &[CheckKind::Irrep])
}

/// Momentum values, dual element, stabilizer split, and span comparison.
pub fn cmd_orbit(cfg: &RunConfig) -> Result<Report> {
    run_checks(cfg, &[CheckKind::Orbit, CheckKind::Struk])
}

/// Full verification pipeline; honors `cfg.checks` when nonempty.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Report> {
    if cfg.checks.is_empty() {
        run_checks(cfg, &CheckKind::ALL)
    } else {
        run_checks(cfg, &cfg.checks.clone())
    }
}

/// Batch mode: run the verify pipeline over a list of weights and
/// aggregate. The report carries one entry per weight.
pub fn cmd_verify_batch(cfg: &RunConfig, weights: &[Vec<i64>]) -> Result<Report> {
    let mut aggregate = Report::new(config_echo(cfg, &CheckKind::ALL));
    let mut cases = Vec::new();
    let mut verdict = true;
    for w in weights {
        let mut case_cfg = cfg.clone();
        case_cfg.weight = w.clone();
        let rep = cmd_verify(&case_cfg)?;
        verdict &= rep.verdict;
        aggregate.note(format!(
            "weight {:?}: {}",
            w,
            if rep.verdict { "pass" } else { "FAIL" }
        ));
        for (k, v) in rep.residuals {
            let key = format!("{:?}/{k}", w);
            aggregate.residuals.insert(key, v);
        }
        cases.push(json!({
            "weight": w,
            "results": Value::Object(rep.results),
            "verdict": if rep.verdict { "pass" } else { "fail" },
        }));
    }
    aggregate
        .results
        .insert("cases".into(), Value::Array(cases));
    aggregate.verdict = verdict;
    Ok(aggregate)
}

/// Exit code policy: 0 pass, 1 fail, 2 usage/configuration error.
pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(r) if r.verdict => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_su2_fundamental_passes() {
        let mut cfg = RunConfig::new("su2", vec![1]);
        cfg.format = OutputFormat::Json;
        let report = cmd_verify(&cfg).unwrap();
        assert!(report.verdict);
        let v = report.to_json();
        assert_eq!(v["results"]["cotangent"]["dim_q"], 3);
        assert_eq!(v["results"]["cotangent"]["dim_bimodule"], 12);
        assert_eq!(v["verdict"], "pass");
        for key in ["config", "results", "residuals", "verdict", "version"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn verify_direct_sum_reports_kernel() {
        let cfg = RunConfig::new("su2+su2", vec![1, 0]);
        let report = cmd_verify(&cfg).unwrap();
        assert!(report.verdict);
        let v = report.to_json();
        assert_eq!(v["results"]["cotangent"]["dim_g_o"], 3);
        assert_eq!(v["results"]["cotangent"]["dim_q"], 3);
    }

    #[test]
    fn irrep_su3_adjoint_dimension() {
        let cfg = RunConfig::new("su3", vec![1, 1]);
        let report = cmd_irrep(&cfg).unwrap();
        assert!(report.verdict);
        assert_eq!(report.to_json()["results"]["irrep"]["dim"], 8);
    }

    #[test]
    fn roots_does_not_need_weight() {
        let cfg = RunConfig::new("so5", vec![]);
        let report = cmd_roots(&cfg).unwrap();
        assert!(report.verdict);
        assert_eq!(report.to_json()["results"]["roots"]["count"], 8);
    }

    #[test]
    fn weight_length_mismatch_is_usage_error() {
        let cfg = RunConfig::new("su3", vec![1]);
        let out = cmd_verify(&cfg);
        assert!(matches!(out, Err(Error::Usage(_))));
        assert_eq!(exit_code(&out), 2);
    }

    #[test]
    fn trivial_weight_flags_vacuous_pass() {
        let cfg = RunConfig::new("su2", vec![0]);
        let report = cmd_verify(&cfg).unwrap();
        assert!(report.verdict);
        let v = report.to_json();
        assert_eq!(v["results"]["cotangent"]["trivial"], true);
        assert_eq!(v["results"]["cotangent"]["dim_q"], 0);
    }

    #[test]
    fn residuals_are_finite_and_nonnegative() {
        let cfg = RunConfig::new("su3", vec![1, 0]);
        let report = cmd_verify(&cfg).unwrap();
        assert!(!report.residuals.is_empty());
        for (k, v) in &report.residuals {
            assert!(v.is_finite() && *v >= 0.0, "{k} = {v}");
        }
    }

    #[test]
    fn batch_mode_aggregates() {
        let cfg = RunConfig::new("su2", vec![]);
        let report = cmd_verify_batch(&cfg, &[vec![1], vec![2]]).unwrap();
        assert!(report.verdict);
        let v = report.to_json();
        assert_eq!(v["results"]["cases"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn unknown_algebra_is_error() {
        let cfg = RunConfig::new("e8", vec![]);
        assert_eq!(exit_code(&cmd_roots(&cfg)), 2);
    }

    #[test]
    fn exit_code_mapping() {
        let mut pass = Report::new(json!({}));
        pass.verdict = true;
        assert_eq!(exit_code(&Ok(pass)), 0);
        let mut fail = Report::new(json!({}));
        fail.verdict = false;
        assert_eq!(exit_code(&Ok(fail)), 1);
        assert_eq!(exit_code(&Err(Error::Usage("x".into()))), 2);
    }
}
