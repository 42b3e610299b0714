//! A representation that is not faithful: su(2) + su(2) acting through
//! its first factor only. The kernel ideal g_o is the silent second
//! factor, the derivation range only sees the faithful part, and the
//! generated bimodule is B (x) g_lambda' — smaller than B (x) g'.
//!
//! ```bash
//! cargo run --example kernel_ideal_direct_sum
//! ```

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::calculus::{verify_main_theorem, DerivationCalculus};
use orbitcalc::irrep::{build_irrep, HighestWeight};
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    let algebra = LieAlgebra::by_name("su2+su2")?;
    let cartan = find_cartan(&algebra, None)?;
    let datum = compute_roots(&algebra, &cartan)?;

    let weight = HighestWeight::new(vec![1, 0])?;
    let irrep = build_irrep(&algebra, &datum, &weight)?;
    println!(
        "algebra {} (dim {}), weight [1,0] -> irrep of dimension {}",
        algebra.label, algebra.dim, irrep.dim()
    );

    let calc = DerivationCalculus::new(&algebra, irrep)?;
    println!(
        "kernel ideal g_o: dim {}, faithful complement g_lambda: dim {}",
        calc.dim_g_o(),
        calc.dim_g_lambda()
    );
    for (i, v) in calc.g_o_basis.iter().enumerate() {
        let coeffs: Vec<String> = v.iter().map(|x| format!("{x:+.3}")).collect();
        println!("  g_o[{i}] = ({})", coeffs.join(", "));
    }

    let report = verify_main_theorem(&algebra, &datum, &weight)?;
    println!(
        "dim Q = {} = dim g_lambda = {} (dim g = {}) -> {}",
        report.dim_q,
        report.dim_g_lambda,
        report.dim_g,
        if report.verdict { "pass" } else { "FAIL" }
    );
    println!("the cotangent bimodule collapses to the faithful factor only");
    Ok(())
}
