//! Coadjoint orbit data for su(3): the momentum functional of a highest
//! weight vector, its dual element in the Cartan subalgebra, and the
//! stabilizer decomposition `g = k (+) m`.
//!
//! The weight [1,0] gives the complex projective plane (dim m = 4); the
//! regular weight [1,1] gives the full flag manifold (dim m = 6, k is
//! exactly the Cartan subalgebra).
//!
//! ```bash
//! cargo run --example flag_orbit
//! ```

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::irrep::{build_irrep, HighestWeight};
use orbitcalc::orbit::{orbit_data, verify_struk, RootClass};
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    let algebra = LieAlgebra::su(3)?;
    let cartan = find_cartan(&algebra, None)?;
    let datum = compute_roots(&algebra, &cartan)?;

    for labels in [vec![1, 0], vec![1, 1]] {
        let weight = HighestWeight::new(labels.clone())?;
        let irrep = build_irrep(&algebra, &datum, &weight)?;
        let (lambda, od) = orbit_data(&algebra, &datum, &irrep)?;

        println!("weight {labels:?} (irrep dimension {})", irrep.dim());
        let z: Vec<String> = od
            .z_diamond
            .iter()
            .map(|v| format!("{v:+.4}"))
            .collect();
        println!("  dual element Z = ({})", z.join(", "));
        println!("  dim k = {}, dim m = {}", od.dim_k(), od.dim_m());
        for (p, class) in od.classified_roots.iter().enumerate() {
            let pairing = lambda.dynkin_value(&datum.triple(p).h);
            println!(
                "  positive root {p}: i l(H) = {pairing:+.1} -> {}",
                match class {
                    RootClass::Stabilizer => "stabilizer",
                    RootClass::Complement => "orbit direction",
                }
            );
        }

        let report = verify_struk(&od, &datum, &lambda)?;
        println!(
            "  span comparison: projector distances {:.2e} (k), {:.2e} (m) -> {}",
            report.k_projector_distance,
            report.m_projector_distance,
            if report.passed { "consistent" } else { "INCONSISTENT" }
        );
        println!();
    }
    Ok(())
}
