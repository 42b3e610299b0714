//! The fuzzy sphere family: for every spin level the full matrix algebra
//! on the (n+1)-dimensional su(2) representation carries the derivation
//! `dT = [pi_X, T]`, and the bimodule its range generates is the whole of
//! `B (x) su(2)'` — a rank-3 cotangent module over every matrix size.
//!
//! ```bash
//! cargo run --example fuzzy_sphere
//! ```

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::calculus::verify_main_theorem;
use orbitcalc::irrep::HighestWeight;
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    let algebra = LieAlgebra::su(2)?;
    let cartan = find_cartan(&algebra, None)?;
    let datum = compute_roots(&algebra, &cartan)?;

    println!("level  N = dim H   dim B   dim Q   bimodule   verdict");
    for n in 1..=6 {
        let weight = HighestWeight::new(vec![n])?;
        let report = verify_main_theorem(&algebra, &datum, &weight)?;
        let dim_h = n + 1;
        let bimodule = report
            .dim_bimodule
            .map(|d| d.to_string())
            .unwrap_or_else(|| "(skipped)".into());
        println!(
            "  [{n}]   {dim_h:5}      {:5}   {:5}   {:>8}   {}",
            dim_h * dim_h,
            report.dim_q,
            bimodule,
            if report.verdict { "pass" } else { "FAIL" }
        );
        assert_eq!(report.dim_q, 3);
    }
    println!("\nEvery level generates the full rank-3 module: the cotangent");
    println!("bundle of each matrix algebra in the family is B (x) su(2)'.");
    Ok(())
}
