//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::time::Instant;

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::calculus::{bimodule_span, verify_main_theorem, DerivationCalculus};
use orbitcalc::cli::{cmd_verify, RunConfig};
use orbitcalc::irrep::{build_irrep, HighestWeight};
use orbitcalc::linalg;
use orbitcalc::oracles::{
    freudenthal_multiplicities, root_count_from_cartan_matrix, weyl_dimension,
};
use orbitcalc::orbit::{momentum, orbit_data, verify_struk};
use orbitcalc::roots::{compute_roots, find_cartan, RootDatum};

fn datum(name: &str) -> (LieAlgebra, RootDatum) {
    let a = LieAlgebra::by_name(name).expect("algebra");
    let h = find_cartan(&a, None).expect("cartan");
    let rd = compute_roots(&a, &h).expect("roots");
    (a, rd)
}

fn hw(labels: &[i64]) -> HighestWeight {
    HighestWeight::new(labels.to_vec()).expect("weight")
}

fn report(criterion: &str, pass: bool) {
    println!(
        "[acceptance] {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed");
}

#[test]
fn criterion_1_root_counts() {
    let mut pass = true;
    for (name, expected) in [("su2", 2), ("su3", 6), ("su4", 12), ("su5", 20), ("so5", 8)] {
        let start = Instant::now();
        let (_, rd) = datum(name);
        let elapsed = start.elapsed();
        let cm = rd.cartan_matrix().expect("cartan matrix");
        let oracle = root_count_from_cartan_matrix(&cm);
        let ok = rd.roots.len() == expected
            && oracle == expected
            && rd.simples.len() == rd.rank()
            && elapsed.as_secs_f64() < 5.0;
        println!(
            "  {name}: |Delta| = {} (expected {expected}, oracle {oracle}), |S| = {}, rank {}, {:.2}s",
            rd.roots.len(),
            rd.simples.len(),
            rd.rank(),
            elapsed.as_secs_f64()
        );
        pass &= ok;
    }
    report("criterion 1 (root counts vs Cartan-matrix oracle)", pass);
}

#[test]
fn criterion_2_triple_identities() {
    let mut pass = true;
    for name in ["su2", "su3", "su4", "so5"] {
        let (a, rd) = datum(name);
        let mut max_res = 0.0_f64;
        for t in rd.triples() {
            let two = num_complex::Complex64::new(2.0, 0.0);
            let r1 = a.bracket(&t.e, &t.f).unwrap().sub(&t.h).norm();
            let r2 = a.bracket(&t.h, &t.e).unwrap().sub(&t.e.scale(two)).norm();
            let r3 = a.bracket(&t.h, &t.f).unwrap().add(&t.f.scale(two)).norm();
            max_res = max_res.max(r1).max(r2).max(r3);
        }
        println!("  {name}: max triple residual {max_res:.2e}");
        pass &= max_res < 1e-9;
    }
    report("criterion 2 (sl2 triple identities < 1e-9)", pass);
}

#[test]
fn criterion_3_irrep_construction() {
    let start = Instant::now();
    let mut pass = true;
    let mut cases: Vec<(&str, Vec<i64>)> = Vec::new();
    for n in 1..=5i64 {
        cases.push(("su2", vec![n]));
    }
    for labels in [[1i64, 0], [0, 1], [2, 0], [1, 1]] {
        cases.push(("su3", labels.to_vec()));
    }
    for (name, labels) in cases {
        let (a, rd) = datum(name);
        let w = hw(&labels);
        let oracle_dim = weyl_dimension(&rd, &w).unwrap() as usize;
        let oracle_table = freudenthal_multiplicities(&rd, &w).unwrap();
        let irrep = build_irrep(&a, &rd, &w).unwrap();

        let mut mults_ok = true;
        let mut total = 0usize;
        for ws in &irrep.weights {
            let labels_i: Vec<i64> = rd
                .weight_labels(&ws.coords)
                .iter()
                .map(|v| v.round() as i64)
                .collect();
            total += ws.multiplicity();
            if oracle_table.multiplicity_of(&labels_i) != ws.multiplicity() {
                mults_ok = false;
            }
        }

        let mut unitarity = 0.0_f64;
        for m in irrep.matrices() {
            unitarity = unitarity.max(linalg::opnorm(&(m + m.adjoint())));
        }

        // Highest-weight space: joint kernel of the simple raisers.
        let n_dim = irrep.dim();
        let spos = rd.simple_positions();
        let mut ann = linalg::CMatrix::zeros(spos.len() * n_dim, n_dim);
        for (s, &p) in spos.iter().enumerate() {
            ann.view_mut((s * n_dim, 0), (n_dim, n_dim))
                .copy_from(&irrep.of_element(&rd.triple(p).e));
        }
        let hw_dim = linalg::complex_kernel(&ann, orbitcalc::Tol::global()).len();

        let ok = irrep.dim() == oracle_dim
            && mults_ok
            && total == oracle_dim
            && unitarity < 1e-9
            && hw_dim == 1;
        println!(
            "  {name} {w}: dim {} (oracle {oracle_dim}), mult {}, hw-space {hw_dim}, unitarity {unitarity:.2e}",
            irrep.dim(),
            if mults_ok { "ok" } else { "MISMATCH" }
        );
        pass &= ok;
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  total {elapsed:.2}s");
    pass &= elapsed < 120.0;
    report("criterion 3 (irrep dims and multiplicities vs oracles)", pass);
}

#[test]
fn criterion_4_momentum_dominance() {
    let mut pass = true;
    for (name, labels) in [
        ("su2", vec![1i64]),
        ("su2", vec![4]),
        ("su3", vec![1, 0]),
        ("su3", vec![1, 1]),
        ("su3", vec![2, 0]),
    ] {
        let (a, rd) = datum(name);
        let w = hw(&labels);
        let irrep = build_irrep(&a, &rd, &w).unwrap();
        let lambda = momentum(&irrep).unwrap();
        let mut label_res = 0.0_f64;
        for (i, &sp) in rd.simple_positions().iter().enumerate() {
            let v = lambda.dynkin_value(&rd.triple(sp).h);
            label_res = label_res.max((v - labels[i] as f64).abs());
        }
        let mut fnorm_res = 0.0_f64;
        for p in 0..rd.positives.len() {
            let t = rd.triple(p);
            let v = lambda.dynkin_value(&t.h);
            let f_xi = irrep.of_element(&t.f) * &irrep.highest_vector;
            fnorm_res = fnorm_res.max((v - f_xi.norm_squared()).abs());
        }
        println!(
            "  {name} {w}: label residual {label_res:.2e}, |F xi|^2 residual {fnorm_res:.2e}"
        );
        pass &= label_res < 1e-7 && fnorm_res < 1e-7;
    }
    report(
        "criterion 4 (momentum labels and lowered-norm identity < 1e-7)",
        pass,
    );
}

#[test]
fn criterion_5_stabilizer_span() {
    let mut pass = true;
    for (labels, dim_k, dim_m) in [([1i64, 0], 4usize, 4usize), ([1, 1], 2, 6)] {
        let (a, rd) = datum("su3");
        let w = hw(&labels);
        let irrep = build_irrep(&a, &rd, &w).unwrap();
        let (lambda, od) = orbit_data(&a, &rd, &irrep).unwrap();
        let struk = verify_struk(&od, &rd, &lambda).unwrap();
        let ok = od.dim_k() == dim_k
            && od.dim_m() == dim_m
            && struk.k_projector_distance < 1e-9
            && struk.m_projector_distance < 1e-9
            && struk.memberships.iter().all(|m| m.consistent);
        println!(
            "  su3 {w}: dim k = {} (expected {dim_k}), dim m = {} (expected {dim_m}), projector distances {:.2e} / {:.2e}, lemma {}",
            od.dim_k(),
            od.dim_m(),
            struk.k_projector_distance,
            struk.m_projector_distance,
            if struk.memberships.iter().all(|m| m.consistent) { "consistent" } else { "INCONSISTENT" },
        );
        pass &= ok;
    }
    report(
        "criterion 5 (stabilizer span equality and membership lemma)",
        pass,
    );
}

fn theorem_cases() -> Vec<(&'static str, Vec<i64>, usize)> {
    let mut cases: Vec<(&'static str, Vec<i64>, usize)> = Vec::new();
    for n in 1..=6i64 {
        cases.push(("su2", vec![n], 3));
    }
    cases.push(("su3", vec![1, 0], 8));
    cases.push(("su3", vec![1, 1], 8));
    cases.push(("su3", vec![2, 0], 8));
    cases.push(("su2+su2", vec![1, 0], 3));
    cases
}

#[test]
fn criterion_6_main_theorem() {
    let start = Instant::now();
    let mut pass = true;
    for (name, labels, expected_q) in theorem_cases() {
        let (a, rd) = datum(name);
        let w = hw(&labels);
        let report = verify_main_theorem(&a, &rd, &w).unwrap();
        let ok = report.verdict
            && report.dim_q == expected_q
            && report.dim_q == report.dim_g_lambda
            && report.rank_stable;
        println!(
            "  {name} {w}: dim Q = {} (expected {expected_q}), dim g_lambda = {}, dim g_o = {}, rank stable {}",
            report.dim_q, report.dim_g_lambda, report.dim_g_o, report.rank_stable
        );
        if name == "su2+su2" {
            pass &= report.dim_g_o == 3;
        }
        pass &= ok;
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  total {elapsed:.2}s");
    pass &= elapsed < 300.0;
    report(
        "criterion 6 (dim Q = dim g_lambda, stable under tolerance shifts)",
        pass,
    );
}

#[test]
fn criterion_7_bimodule_counts() {
    let mut pass = true;
    for (labels, expected) in [(vec![1i64], 12usize), (vec![2], 27)] {
        let (a, rd) = datum("su2");
        let w = hw(&labels);
        let irrep = build_irrep(&a, &rd, &w).unwrap();
        let calc = DerivationCalculus::new(&a, irrep).unwrap();
        let got = bimodule_span(&calc, 1 << 24).unwrap();
        println!("  su2 {w}: bimodule rank {got} (expected {expected})");
        pass &= got == expected;
    }
    report(
        "criterion 7 (direct bimodule rank over all matrix-unit triples)",
        pass,
    );
}

#[test]
fn criterion_8_witness_functionals() {
    let mut pass = true;
    for (name, labels, _) in theorem_cases() {
        let (a, rd) = datum(name);
        let w = hw(&labels);
        let report = verify_main_theorem(&a, &rd, &w).unwrap();
        let max_residual = report
            .witnesses
            .iter()
            .map(|wc| wc.span_residual)
            .fold(0.0_f64, f64::max);
        let all_ok = !report.witnesses.is_empty()
            && report
                .witnesses
                .iter()
                .all(|wc| wc.span_residual < 1e-8 && wc.structure_ok);
        println!(
            "  {name} {w}: {} witness rows, max span residual {max_residual:.2e}, patterns {}",
            report.witnesses.len(),
            if report.witnesses.iter().all(|wc| wc.structure_ok) {
                "ok"
            } else {
                "BROKEN"
            }
        );
        pass &= all_ok;
    }
    report(
        "criterion 8 (witness functionals in the span, with zero patterns)",
        pass,
    );
}

#[test]
fn criterion_9_trivial_weight() {
    let (a, rd) = datum("su3");
    let w = hw(&[0, 0]);
    let ct = verify_main_theorem(&a, &rd, &w).unwrap();
    let library_ok = ct.verdict && ct.trivial && ct.dim_q == 0 && ct.dim_g_lambda == 0;

    // The CLI path must report a pass and flag the trivial case.
    let cfg = RunConfig::new("su3", vec![0, 0]);
    let report_cli = cmd_verify(&cfg).unwrap();
    let v = report_cli.to_json();
    let cli_ok = report_cli.verdict
        && v["results"]["cotangent"]["trivial"] == serde_json::json!(true)
        && v["results"]["cotangent"]["dim_q"] == serde_json::json!(0);
    println!(
        "  su3 [0,0]: dim Q = {}, dim g_lambda = {}, trivial flag {}, CLI verdict {}",
        ct.dim_q,
        ct.dim_g_lambda,
        ct.trivial,
        if report_cli.verdict { "pass" } else { "fail" }
    );
    report(
        "criterion 9 (trivial weight: vacuous pass, flagged)",
        library_ok && cli_ok,
    );
}
