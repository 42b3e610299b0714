//! Compute the root system of a compact semisimple algebra and the
//! normalized triple attached to each positive root.
//!
//! ```bash
//! cargo run --example roots_and_triples
//! ```

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    for name in ["su3", "so5"] {
        let algebra = LieAlgebra::by_name(name)?;
        let cartan = find_cartan(&algebra, None)?;
        let datum = compute_roots(&algebra, &cartan)?;

        println!("{name}: dim {} rank {}", algebra.dim, datum.rank());
        println!(
            "  {} roots, {} positive, simple roots:",
            datum.roots.len(),
            datum.positives.len()
        );
        for root in datum.simple_roots() {
            let vals: Vec<String> = root.values.iter().map(|v| format!("{v:+.3}")).collect();
            println!("    ({})", vals.join(", "));
        }

        println!("  Cartan matrix {:?}", datum.cartan_matrix()?);

        // Every triple satisfies [H,E] = 2E, [H,F] = -2F, [E,F] = H.
        for (p, t) in datum.triples().iter().enumerate() {
            let r = algebra
                .bracket(&t.h, &t.e)?
                .sub(&t.e.scale(num_complex::Complex64::new(2.0, 0.0)))
                .norm();
            println!("    positive root {p}: [H,E] - 2E residual {r:.2e}");
        }
        println!();
    }
    Ok(())
}
