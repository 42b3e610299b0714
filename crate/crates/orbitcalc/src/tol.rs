//! Global tolerance policy.
//!
//! One knob controls every numerical decision in the crate:
//!
//! * `residual` (default `1e-9`) — absolute bound on residual norms
//!   (bracket identities, homomorphism defects, projector distances).
//! * `rank_rel` (default `1e-8`) — relative singular-value cutoff for
//!   every rank/kernel decision: a singular value counts as nonzero
//!   when it exceeds `rank_rel * sigma_max`.
//!
//! Setting the environment variable `ORBITCALC_TOL` to a positive float
//! overrides the pair, keeping the 1:10 ratio (`residual = v`,
//! `rank_rel = 10 * v`). The variable is read once per process.

use std::sync::OnceLock;

/// Default absolute residual tolerance.
pub const DEFAULT_RESIDUAL: f64 = 1e-9;

/// Default relative singular-value threshold for rank decisions.
pub const DEFAULT_RANK_REL: f64 = 1e-8;

/// Relative distance below which two weight vectors are considered equal
/// when clustering simultaneous eigenvalues.
pub const WEIGHT_CLUSTER_TOL: f64 = 1e-7;

/// Absolute bound below which `i*weight(H)` must sit from the nearest integer.
pub const INTEGRALITY_TOL: f64 = 1e-7;

/// Coordinates smaller than this are skipped when fixing the phase of a
/// root-space or highest-weight vector.
pub const PHASE_COORD_TOL: f64 = 1e-6;

/// Stop rule for cyclic subspace generation: a sweep that adds no vector
/// with a component larger than this outside the current span terminates.
pub const CYCLIC_STOP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tol {
    pub residual: f64,
    pub rank_rel: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            residual: DEFAULT_RESIDUAL,
            rank_rel: DEFAULT_RANK_REL,
        }
    }
}

impl Tol {
    /// The process-wide tolerance, honoring `ORBITCALC_TOL` if set.
    pub fn global() -> Tol {
        static GLOBAL: OnceLock<Tol> = OnceLock::new();
        *GLOBAL.get_or_init(|| match std::env::var("ORBITCALC_TOL") {
            Ok(s) => match s.trim().parse::<f64>() {
                Ok(v) if v > 0.0 && v.is_finite() => Tol {
                    residual: v,
                    rank_rel: 10.0 * v,
                },
                _ => Tol::default(),
            },
            Err(_) => Tol::default(),
        })
    }

    /// Same tolerance with the rank threshold scaled by `factor`.
    /// Used to test stability of rank decisions under perturbation.
    pub fn scale_rank(self, factor: f64) -> Tol {
        Tol {
            rank_rel: self.rank_rel * factor,
            ..self
        }
    }
}
