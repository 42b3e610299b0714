//! Closed-form oracles against the explicit construction: dimensions from
//! the Weyl product formula, weight multiplicities from the Freudenthal
//! recursion, both compared with the weight decomposition of the
//! constructed matrices.
//!
//! ```bash
//! cargo run --example weight_multiplicities
//! ```

use orbitcalc::algebra::LieAlgebra;
use orbitcalc::irrep::{build_irrep, HighestWeight};
use orbitcalc::oracles::{freudenthal_multiplicities, weyl_dimension};
use orbitcalc::roots::{compute_roots, find_cartan};

fn main() -> orbitcalc::Result<()> {
    let algebra = LieAlgebra::su(3)?;
    let cartan = find_cartan(&algebra, None)?;
    let datum = compute_roots(&algebra, &cartan)?;

    for labels in [vec![1, 1], vec![2, 0], vec![2, 1]] {
        let weight = HighestWeight::new(labels.clone())?;
        let dim = weyl_dimension(&datum, &weight)?;
        let table = freudenthal_multiplicities(&datum, &weight)?;
        println!("su3 weight {labels:?}: dimension {dim}");
        println!("  weight        multiplicity   constructed");

        let irrep = build_irrep(&algebra, &datum, &weight)?;
        for entry in &table.entries {
            let constructed = irrep
                .weights
                .iter()
                .find(|ws| {
                    let l: Vec<i64> = datum
                        .weight_labels(&ws.coords)
                        .iter()
                        .map(|v| v.round() as i64)
                        .collect();
                    l == entry.labels
                })
                .map(|ws| ws.multiplicity())
                .unwrap_or(0);
            println!(
                "  {:>10}   {:>10}   {:>10}",
                format!("{:?}", entry.labels),
                entry.multiplicity,
                constructed
            );
            assert_eq!(entry.multiplicity, constructed);
        }
        println!("  total {} = dimension {dim}\n", table.total());
    }
    Ok(())
}
