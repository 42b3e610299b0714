//! Compact semisimple Lie algebras, their highest-weight representations,
//! coadjoint orbit data, and first-order differential calculi on matrix
//! algebras.
//!
//! The central computation: for an irreducible unitary representation of
//! a compact semisimple Lie algebra, the derivation `dT = [pi_X, T]` on
//! the full matrix algebra `B` generates, as a `B`-bimodule, exactly
//! `B (x) g_lambda'`, where `g_lambda` is the ideal complementary to the
//! kernel of the representation. The crate constructs all the ingredients
//! explicitly (root systems, normalized triples, highest-weight matrices,
//! momentum functionals, stabilizer splits) and verifies the bimodule
//! statement numerically, with independent oracles for every stage.
//!
//! ## Examples
//!
//! The `examples/` directory is the guided tour, one capability each:
//!
//! - **`roots_and_triples`** — root systems, simple roots, Cartan
//!   matrices, and normalized triples
//! - **`fuzzy_sphere`** — the su(2) spin family: every matrix algebra
//!   level carries the same rank-3 cotangent module
//! - **`flag_orbit`** — momentum functionals, dual elements, and
//!   stabilizer splits for the su(3) orbits
//! - **`kernel_ideal_direct_sum`** — a non-faithful representation and
//!   the collapse of the bimodule onto the faithful ideal
//! - **`weight_multiplicities`** — Weyl / Freudenthal oracles against the
//!   constructed weight decompositions
//! - **`custom_algebra_json`** — defining an algebra in the JSON spec
//!   format and running the pipeline on it
//!
//! ```bash
//! cargo run --example fuzzy_sphere
//! cargo run --example flag_orbit
//! ```
//!
//! ## Library sketch
//!
//! ```
//! use orbitcalc::algebra::LieAlgebra;
//! use orbitcalc::roots::{find_cartan, compute_roots};
//! use orbitcalc::irrep::HighestWeight;
//! use orbitcalc::calculus::verify_main_theorem;
//!
//! let algebra = LieAlgebra::su(2)?;
//! let cartan = find_cartan(&algebra, None)?;
//! let datum = compute_roots(&algebra, &cartan)?;
//! let report = verify_main_theorem(&algebra, &datum, &HighestWeight::new(vec![2])?)?;
//! assert!(report.verdict);
//! assert_eq!(report.dim_q, 3);
//! # Ok::<(), orbitcalc::Error>(())
//! ```
//!
//! ## Command line
//!
//! A thin binary exposes the pipeline for scripting; exit code 0 means
//! the verdict passed, 1 a failed verdict, 2 a usage error:
//!
//! ```bash
//! orbitcalc roots  --algebra su3
//! orbitcalc irrep  --algebra su3 --weight 1 1 --format json
//! orbitcalc orbit  --algebra su3 --weight 1 0
//! orbitcalc verify --algebra su2 --weight 1
//! orbitcalc verify --algebra su2 --weights-file weights.txt
//! ```
//!
//! The environment variable `ORBITCALC_TOL` overrides the global
//! tolerance pair (defaults: `1e-9` for residuals, `1e-8` relative for
//! rank cutoffs); see [`tol`].

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod irrep;
pub mod linalg;
pub mod oracles;
pub mod orbit;
pub mod roots;
pub mod tol;

pub use algebra::{check_algebra, AlgebraSpec, ComplexElement, KillingForm, LieAlgebra};
pub use error::{Error, Result};
pub use tol::Tol;
