//! Define an algebra in the JSON spec format, load it back, and run the
//! verification pipeline on it. The spec format carries the structure
//! constants as sparse `[i, j, k, value]` triplets and each defining
//! matrix as a flat row-major list of `[re, im]` pairs.
//!
//! ```bash
//! cargo run --example custom_algebra_json
//! ```

use orbitcalc::algebra::{check_algebra, LieAlgebra};
use orbitcalc::calculus::verify_main_theorem;
use orbitcalc::irrep::HighestWeight;
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    // su(2) with basis (i/2) sigma_a: [e1,e2] = -e3 and cyclic.
    let spec_json = r#"{
        "label": "su2-by-hand",
        "dim": 3,
        "structure_constants": [
            [0, 1, 2, -1.0], [1, 0, 2, 1.0],
            [1, 2, 0, -1.0], [2, 1, 0, 1.0],
            [2, 0, 1, -1.0], [0, 2, 1, 1.0]
        ],
        "defining_rep": [
            [[0.0, 0.0], [0.0, 0.5], [0.0, 0.5], [0.0, 0.0]],
            [[0.0, 0.0], [0.5, 0.0], [-0.5, 0.0], [0.0, 0.0]],
            [[0.0, 0.5], [0.0, 0.0], [0.0, 0.0], [0.0, -0.5]]
        ]
    }"#;

    let algebra = LieAlgebra::from_spec_json(spec_json)?;
    let diagnostics = check_algebra(&algebra);
    println!("loaded {:?} (dim {})", algebra.label, algebra.dim);
    for check in &diagnostics.checks {
        println!(
            "  {:32} {} (residual {:.2e})",
            check.name,
            if check.passed { "ok" } else { "FAIL" },
            check.residual
        );
    }
    assert!(diagnostics.passed());

    let cartan = find_cartan(&algebra, None)?;
    let datum = compute_roots(&algebra, &cartan)?;
    println!(
        "root system: {} roots, rank {}",
        datum.roots.len(),
        datum.rank()
    );

    let report = verify_main_theorem(&algebra, &datum, &HighestWeight::new(vec![2])?)?;
    println!(
        "weight [2]: dim Q = {} vs dim g_lambda = {} -> {}",
        report.dim_q,
        report.dim_g_lambda,
        if report.verdict { "pass" } else { "FAIL" }
    );

    // Round-trip: a built-in algebra serializes to the same format.
    let round = serde_json::to_string_pretty(&LieAlgebra::su(2)?.to_spec())
        .expect("spec serializes");
    println!("\nbuilt-in su2 as a spec file:\n{round}");
    Ok(())
}
