//! Root-space decomposition with respect to a Cartan subalgebra.
//!
//! Roots follow the convention `ad_H(E) = i a(H) E` for real `H` in the
//! Cartan subalgebra, so a root is stored as the real vector of values
//! `a(H_j)` against the ordered Cartan basis. The triple attached to a
//! positive root is normalized in two steps: scale `E` so that
//! `Kil(E, E^*) = -1`, set `H~ = [E, E^*]`, then rescale `E` so that
//! `[[E, E^*], E] = 2E`. The result satisfies `[E, E^*] = H`,
//! `[H, E] = 2E`, `[H, F] = -2F` with `F = E^*` and `H` in `i h`.

use crate::algebra::{ComplexElement, KillingForm, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, Cf, RMatrix, RVector};
use crate::tol::{Tol, PHASE_COORD_TOL, WEIGHT_CLUSTER_TOL};

/// A maximal abelian subalgebra of the real form, as coefficient vectors.
#[derive(Debug, Clone)]
pub struct CartanSubalgebra {
    pub basis: Vec<RVector>,
}

impl CartanSubalgebra {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// A root: the vector of values `a(H_j)` over the ordered Cartan basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub values: RVector,
}

impl Root {
    pub fn neg(&self) -> Root {
        Root {
            values: -self.values.clone(),
        }
    }

    pub fn approx_eq(&self, other: &Root, eps: f64) -> bool {
        (self.values.clone() - &other.values).amax() <= eps
    }
}

/// Normalized triple `(H, E, F)` attached to a positive root.
#[derive(Debug, Clone)]
pub struct Sl2Triple {
    pub root: Root,
    pub h: ComplexElement,
    pub e: ComplexElement,
    pub f: ComplexElement,
}

/// Full root datum: roots, a positive system, simple roots, root spaces,
/// and cached normalized triples for the positive roots. Owns a copy of
/// the algebra it was computed from so that downstream consumers can
/// bracket and pair without re-threading it.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub algebra: LieAlgebra,
    pub cartan: CartanSubalgebra,
    pub roots: Vec<Root>,
    /// Indices into `roots` forming the chosen positive system.
    pub positives: Vec<usize>,
    /// Indices into `roots` (subset of `positives`) of the simple roots.
    pub simples: Vec<usize>,
    /// Unit spanning vector of the root space, per root index.
    pub root_spaces: Vec<ComplexElement>,
    pub kil: KillingForm,
    triples: Vec<Sl2Triple>,
    /// Row vectors `d_p` with `i mu(H_{a_p}) = d_p . mu` for a weight `mu`
    /// in Cartan coordinates; one per positive root (same order).
    pairing_rows: Vec<RVector>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positives.iter().map(|&i| &self.roots[i])
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Root> {
        self.simples.iter().map(|&i| &self.roots[i])
    }

    /// Cached normalized triple for the `p`-th positive root.
    pub fn triple(&self, p: usize) -> &Sl2Triple {
        &self.triples[p]
    }

    pub fn triples(&self) -> &[Sl2Triple] {
        &self.triples
    }

    /// Evaluate `i mu(H_{a_p})` for a weight given in Cartan coordinates.
    pub fn dynkin_pairing(&self, p: usize, mu: &RVector) -> f64 {
        self.pairing_rows[p].dot(mu)
    }

    /// Positions (into `positives`) of the simple roots.
    pub fn simple_positions(&self) -> Vec<usize> {
        self.simples
            .iter()
            .map(|s| {
                self.positives
                    .iter()
                    .position(|p| p == s)
                    .expect("simple roots are positive")
            })
            .collect()
    }

    /// Matrix whose row `i` evaluates `i mu(H_{a_i})` for the `i`-th simple
    /// root; multiplying a weight's Cartan coordinates by it yields the
    /// weight's labels.
    pub fn simple_pairing_matrix(&self) -> RMatrix {
        let spos = self.simple_positions();
        let r = self.rank();
        RMatrix::from_fn(r, r, |i, j| self.pairing_rows[spos[i]][j])
    }

    /// Cartan coordinates of the weight with the given labels
    /// `n_i = i mu(H_{a_i})`.
    pub fn weight_coords(&self, labels: &[f64]) -> Result<RVector> {
        let r = self.rank();
        if labels.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: labels.len(),
            });
        }
        let d = self.simple_pairing_matrix();
        let rhs = RVector::from_fn(r, |i, _| labels[i]);
        d.lu()
            .solve(&rhs)
            .ok_or_else(|| Error::BrokenRootDatum("simple coroots are degenerate".into()))
    }

    /// Labels `i mu(H_{a_i})` of a weight given in Cartan coordinates.
    pub fn weight_labels(&self, coords: &RVector) -> Vec<f64> {
        let spos = self.simple_positions();
        spos.iter()
            .map(|&p| self.pairing_rows[p].dot(coords))
            .collect()
    }

    /// Integer Cartan matrix `A[i][j] = i a_j(H_{a_i})` over the simple roots.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let spos = self.simple_positions();
        let mut rows = Vec::with_capacity(spos.len());
        for &pi in &spos {
            let mut row = Vec::with_capacity(spos.len());
            for &sj in &self.simples {
                let v = self.dynkin_pairing(pi, &self.roots[sj].values);
                let r = v.round();
                if (v - r).abs() > 1e-6 {
                    return Err(Error::BrokenRootDatum(format!(
                        "non-integer Cartan pairing {v}"
                    )));
                }
                row.push(r as i64);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Find a maximal abelian subalgebra containing the (optional) hint.
///
/// For built-in algebras without a hint this returns the standard
/// diagonal (su) or block-diagonal (so) Cartan subalgebra; otherwise the
/// hint is greedily extended by centralizer elements until maximal.
/// Maximal abelian subalgebras of a compact semisimple algebra are all
/// Cartan subalgebras, so no regularity search is needed.
pub fn find_cartan(algebra: &LieAlgebra, hint: Option<&[RVector]>) -> Result<CartanSubalgebra> {
    let tol = Tol::global();
    let n = algebra.dim;

    let mut current: Vec<RVector> = match hint {
        Some(vs) => {
            for v in vs {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: v.len(),
                    });
                }
            }
            for (i, v) in vs.iter().enumerate() {
                for w in vs.iter().skip(i + 1) {
                    let br = algebra.ad_real(v) * w;
                    if br.amax() > tol.residual * (1.0 + v.amax() * w.amax()) {
                        return Err(Error::HintNotAbelian(format!(
                            "bracket residual {:.3e}",
                            br.amax()
                        )));
                    }
                }
            }
            vs.to_vec()
        }
        None => {
            if let Some(idxs) = algebra.standard_cartan_indices() {
                return Ok(CartanSubalgebra {
                    basis: idxs
                        .iter()
                        .map(|&i| RVector::from_fn(n, |j, _| if i == j { 1.0 } else { 0.0 }))
                        .collect(),
                });
            }
            Vec::new()
        }
    };

    loop {
        // Centralizer of the current set: common kernel of the ad maps.
        let centralizer = if current.is_empty() {
            (0..n)
                .map(|i| RVector::from_fn(n, |j, _| if i == j { 1.0 } else { 0.0 }))
                .collect::<Vec<_>>()
        } else {
            let mut stacked = RMatrix::zeros(current.len() * n, n);
            for (r, v) in current.iter().enumerate() {
                stacked
                    .view_mut((r * n, 0), (n, n))
                    .copy_from(&algebra.ad_real(v));
            }
            linalg::real_kernel(&stacked, tol)
        };

        if centralizer.len() < current.len() {
            return Err(Error::HintDegenerate(format!(
                "hint spans {} directions but its centralizer has dimension {}",
                current.len(),
                centralizer.len()
            )));
        }
        if centralizer.len() == current.len() {
            // Maximal: the centralizer of the span equals the span.
            return Ok(CartanSubalgebra { basis: current });
        }

        // Extend by the first centralizer vector with a usable component
        // outside the current span.
        let mut extended = false;
        for cand in &centralizer {
            let mut w = cand.clone();
            for b in &current {
                let b_unit = b / b.norm();
                let c = b_unit.dot(&w);
                w -= b_unit * c;
            }
            if w.norm() > 1e-8 {
                current.push(&w / w.norm());
                extended = true;
                break;
            }
        }
        if !extended {
            return Err(Error::HintDegenerate(
                "centralizer exceeds the span but no independent direction was found".into(),
            ));
        }
    }
}

fn phase_fix(v: &CVector) -> CVector {
    for i in 0..v.len() {
        if v[i].norm() > PHASE_COORD_TOL {
            let ph = v[i] / Cf::new(v[i].norm(), 0.0);
            return v * ph.conj();
        }
    }
    v.clone()
}

/// Compute the full root datum of an algebra with respect to a Cartan
/// subalgebra: simultaneous eigendecomposition of `ad` restricted to the
/// Cartan, positivity by a fixed regular functional, simples by the
/// two-term sum test, and normalized triples for every positive root.
pub fn compute_roots(algebra: &LieAlgebra, cartan: &CartanSubalgebra) -> Result<RootDatum> {
    let tol = Tol::global();
    let n = algebra.dim;
    let rank = cartan.rank();
    if rank == 0 {
        return Err(Error::BrokenRootDatum("empty Cartan subalgebra".into()));
    }
    let kil = KillingForm::of(algebra);
    let chol = kil
        .gram
        .clone()
        .cholesky()
        .ok_or(Error::SingularGram)?;
    let l = chol.l();
    let mut lt_inv = RMatrix::identity(n, n);
    l.transpose().solve_upper_triangular_mut(&mut lt_inv);

    // Hermitian commuting family: M_j = -i * (L^T ad_{h_j} L^{-T}).
    let mats: Vec<CMatrix> = cartan
        .basis
        .iter()
        .map(|h| {
            let ad = algebra.ad_real(h);
            let tilde = l.transpose() * ad * &lt_inv;
            linalg::to_complex(&tilde) * Cf::new(0.0, -1.0)
        })
        .collect();
    let (u, col_weights) = linalg::simultaneous_eigenbasis(&mats, WEIGHT_CLUSTER_TOL)?;
    let groups = linalg::group_by_weight(&col_weights, WEIGHT_CLUSTER_TOL);

    let scale = col_weights.iter().map(|w| w.amax()).fold(1.0_f64, f64::max);
    let zero_eps = WEIGHT_CLUSTER_TOL * scale;

    let lt_inv_c = linalg::to_complex(&lt_inv);
    let mut roots: Vec<Root> = Vec::new();
    let mut spaces: Vec<ComplexElement> = Vec::new();
    let mut zero_dim = 0usize;
    for (w, idxs) in &groups {
        if w.amax() <= zero_eps {
            zero_dim += idxs.len();
            continue;
        }
        if idxs.len() != 1 {
            return Err(Error::BrokenRootDatum(format!(
                "root space for weight {:?} has dimension {}",
                w.as_slice(),
                idxs.len()
            )));
        }
        let y = u.column(idxs[0]).into_owned();
        let x = &lt_inv_c * y;
        let x = phase_fix(&(x.clone() / Cf::new(x.norm(), 0.0)));
        roots.push(Root { values: w.clone() });
        spaces.push(ComplexElement::new(x));
    }
    if zero_dim != rank {
        return Err(Error::BrokenRootDatum(format!(
            "zero-weight space has dimension {zero_dim}, expected the rank {rank} \
             (the given subalgebra is not a Cartan subalgebra)"
        )));
    }
    if roots.len() + rank != n {
        return Err(Error::BrokenRootDatum(
            "root space dimensions do not sum to dim g".into(),
        ));
    }

    // Canonical ordering: lexicographically descending root values.
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&i, &j| {
        for k in 0..rank {
            let a = roots[i].values[k];
            let b = roots[j].values[k];
            if (a - b).abs() > 1e-12 {
                return b.partial_cmp(&a).unwrap();
            }
        }
        std::cmp::Ordering::Equal
    });
    let roots: Vec<Root> = order.iter().map(|&i| roots[i].clone()).collect();
    let spaces: Vec<ComplexElement> = order.iter().map(|&i| spaces[i].clone()).collect();

    // Closure under negation.
    for r in &roots {
        if !roots.iter().any(|s| s.approx_eq(&r.neg(), zero_eps)) {
            return Err(Error::BrokenRootDatum(
                "root system is not closed under negation".into(),
            ));
        }
    }

    // Positivity: regular functional with powers of ten against the ordered
    // Cartan basis, deterministically perturbed if any value is too close
    // to zero.
    let positives = choose_positives(&roots, rank)?;
    let simples = choose_simples(&roots, &positives, zero_eps);

    let mut datum = RootDatum {
        algebra: algebra.clone(),
        cartan: cartan.clone(),
        roots,
        positives,
        simples,
        root_spaces: spaces,
        kil,
        triples: Vec::new(),
        pairing_rows: Vec::new(),
    };

    // Normalized triples and coroot pairing rows for every positive root.
    let cartan_cols = cartan_matrix_columns(&datum.cartan);
    for p in 0..datum.positives.len() {
        let root = datum.roots[datum.positives[p]].clone();
        let kil = datum.kil.clone();
        let triple = sl2_triple(&datum, &root, &kil)?;
        let (u_coeffs, res) = linalg::lstsq(&cartan_cols, &triple.h.coeffs);
        if res > tol.residual * (1.0 + triple.h.norm()) {
            return Err(Error::BrokenRootDatum(format!(
                "triple element H lies outside the complexified Cartan (residual {res:.3e})"
            )));
        }
        let row = RVector::from_fn(datum.rank(), |j, _| (u_coeffs[j] * Cf::new(0.0, 1.0)).re);
        datum.triples.push(triple);
        datum.pairing_rows.push(row);
    }
    Ok(datum)
}

fn cartan_matrix_columns(cartan: &CartanSubalgebra) -> CMatrix {
    let n = cartan.basis[0].len();
    let mut m = CMatrix::zeros(n, cartan.rank());
    for (j, h) in cartan.basis.iter().enumerate() {
        m.set_column(j, &linalg::vec_to_complex(h));
    }
    m
}

fn choose_positives(roots: &[Root], rank: usize) -> Result<Vec<usize>> {
    for attempt in 0..100 {
        let coeffs = RVector::from_fn(rank, |i, _| {
            let base = 10f64.powi((rank - 1 - i) as i32);
            base * (1.0 + attempt as f64 * 1e-3 * (i + 1) as f64)
        });
        let phi: Vec<f64> = roots.iter().map(|r| coeffs.dot(&r.values)).collect();
        let max_phi = phi.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if phi.iter().all(|v| v.abs() > 1e-6 * max_phi) {
            let pos: Vec<usize> = (0..roots.len()).filter(|&i| phi[i] > 0.0).collect();
            if pos.len() * 2 != roots.len() {
                return Err(Error::BrokenRootDatum(
                    "positive system does not split the roots in half".into(),
                ));
            }
            return Ok(pos);
        }
    }
    Err(Error::AmbiguousClustering(
        "no regular functional separates the roots".into(),
    ))
}

fn choose_simples(roots: &[Root], positives: &[usize], eps: f64) -> Vec<usize> {
    positives
        .iter()
        .cloned()
        .filter(|&g| {
            !positives.iter().any(|&a| {
                positives.iter().any(|&b| {
                    let sum = roots[a].values.clone() + &roots[b].values;
                    (sum - &roots[g].values).amax() <= eps
                })
            })
        })
        .collect()
}

/// Normalize a triple for a positive root following the two-step rescaling:
/// `Kil(E, E^*) = -1` first, then `[[E, E^*], E] = 2E`. The phase of `E` is
/// fixed by making its first significant coordinate real and positive.
pub fn sl2_triple(datum: &RootDatum, alpha: &Root, kil: &KillingForm) -> Result<Sl2Triple> {
    let tol = Tol::global();
    let scale = datum
        .roots
        .iter()
        .map(|r| r.values.amax())
        .fold(1.0_f64, f64::max);
    let eps = WEIGHT_CLUSTER_TOL * scale;
    let idx = datum
        .positives
        .iter()
        .cloned()
        .find(|&i| datum.roots[i].approx_eq(alpha, eps))
        .ok_or(Error::NotARoot)?;

    // Algebra is implicit in the datum's Killing form dimensions; the
    // bracket comes from the root-space construction, so rebuild it from
    // the structure constants owner.
    let e0 = phase_fix(&datum.root_spaces[idx].coeffs);
    let mut e = ComplexElement::new(e0);

    // Step 1: Kil(E, E^*) = -1.
    let s = kil.eval(&e, &e.star())?;
    if s.norm() < 1e-14 {
        return Err(Error::BrokenRootDatum(
            "root vector has vanishing Kil(E, E*)".into(),
        ));
    }
    e = e.scale(Cf::new(1.0 / (-s.re).sqrt(), 0.0));

    // Step 2: [[E, E^*], E] = c E with c > 0; rescale so c = 2.
    let alg = &datum.algebra;
    let h_tilde = alg.bracket(&e, &e.star())?;
    if h_tilde.norm() < tol.residual {
        return Err(Error::BrokenRootDatum(
            "[E, E*] is numerically zero; the paired root spaces do not bracket onto the Cartan"
                .into(),
        ));
    }
    let c = -kil.eval(&h_tilde, &h_tilde)?.re;
    if c <= 0.0 {
        return Err(Error::BrokenRootDatum(format!(
            "normalization coefficient {c:.3e} is not positive"
        )));
    }
    e = e.scale(Cf::new((2.0 / c).sqrt(), 0.0));
    let h = alg.bracket(&e, &e.star())?;
    let f = e.star();

    // Residual checks of the triple identities.
    let r1 = alg.bracket(&h, &e)?.sub(&e.scale(Cf::new(2.0, 0.0))).norm();
    let r2 = alg.bracket(&h, &f)?.add(&f.scale(Cf::new(2.0, 0.0))).norm();
    let r3 = alg.bracket(&e, &f)?.sub(&h).norm();
    let bound = tol.residual * (1.0 + h.norm() + e.norm());
    if r1 > bound || r2 > bound || r3 > bound {
        return Err(Error::BrokenRootDatum(format!(
            "triple identities violated: residuals {r1:.3e}, {r2:.3e}, {r3:.3e}"
        )));
    }

    Ok(Sl2Triple {
        root: alpha.clone(),
        h,
        e,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::opnorm;

    fn datum_for(name: &str) -> RootDatum {
        let a = LieAlgebra::by_name(name).unwrap();
        let h = find_cartan(&a, None).unwrap();
        compute_roots(&a, &h).unwrap()
    }

    #[test]
    fn su2_root_counts() {
        let rd = datum_for("su2");
        assert_eq!(rd.roots.len(), 2);
        assert_eq!(rd.positives.len(), 1);
        assert_eq!(rd.simples.len(), 1);
        assert_eq!(rd.rank(), 1);
    }

    #[test]
    fn su2_triple_h_is_diag_1_minus_1() {
        let rd = datum_for("su2");
        let h = &rd.triple(0).h;
        let mat = rd.algebra.rep_of(h);
        let expected = CMatrix::from_row_slice(
            2,
            2,
            &[
                Cf::new(1.0, 0.0),
                Cf::new(0.0, 0.0),
                Cf::new(0.0, 0.0),
                Cf::new(-1.0, 0.0),
            ],
        );
        assert!(opnorm(&(mat - expected)) < 1e-10);
    }

    #[test]
    fn su3_root_counts() {
        let rd = datum_for("su3");
        assert_eq!(rd.roots.len(), 6);
        assert_eq!(rd.positives.len(), 3);
        assert_eq!(rd.simples.len(), 2);
    }

    #[test]
    fn so5_root_counts() {
        let rd = datum_for("so5");
        assert_eq!(rd.roots.len(), 8);
        assert_eq!(rd.simples.len(), 2);
        assert_eq!(rd.rank(), 2);
    }

    #[test]
    fn dimensions_sum() {
        for name in ["su2", "su3", "su4", "so4", "so5"] {
            let rd = datum_for(name);
            assert_eq!(
                rd.rank() + rd.roots.len(),
                rd.algebra.dim,
                "dimension count failed for {name}"
            );
        }
    }

    #[test]
    fn triples_satisfy_sl2_relations() {
        for name in ["su2", "su3", "so5"] {
            let rd = datum_for(name);
            let alg = &rd.algebra;
            for t in rd.triples() {
                let r1 = alg
                    .bracket(&t.h, &t.e)
                    .unwrap()
                    .sub(&t.e.scale(Cf::new(2.0, 0.0)))
                    .norm();
                let r2 = alg
                    .bracket(&t.h, &t.f)
                    .unwrap()
                    .add(&t.f.scale(Cf::new(2.0, 0.0)))
                    .norm();
                let r3 = alg.bracket(&t.e, &t.f).unwrap().sub(&t.h).norm();
                assert!(r1 < 1e-10 && r2 < 1e-10 && r3 < 1e-10, "{name}: {r1} {r2} {r3}");
                // F = star(E) and H in i*h: purely imaginary coefficients.
                assert!((t.f.coeffs.clone() - t.e.star().coeffs).norm() < 1e-14);
                assert!(t.h.coeffs.iter().all(|c| c.re.abs() < 1e-10));
            }
        }
    }

    #[test]
    fn pairing_of_root_with_own_coroot_is_two() {
        for name in ["su2", "su3", "so5"] {
            let rd = datum_for(name);
            for (p, &ri) in rd.positives.iter().enumerate() {
                let v = rd.dynkin_pairing(p, &rd.roots[ri].values);
                assert!((v - 2.0).abs() < 1e-9, "{name}: i a(H_a) = {v}");
            }
        }
    }

    #[test]
    fn theta_swaps_root_spaces() {
        let rd = datum_for("su3");
        for (i, r) in rd.roots.iter().enumerate() {
            let neg_idx = rd
                .roots
                .iter()
                .position(|s| s.approx_eq(&r.neg(), 1e-7))
                .unwrap();
            let mapped = rd.root_spaces[i].theta();
            let target = &rd.root_spaces[neg_idx];
            let overlap = target.coeffs.dotc(&mapped.coeffs).norm();
            assert!((overlap - 1.0).abs() < 1e-9, "overlap {overlap}");
        }
    }

    #[test]
    fn killing_orthogonality_of_root_spaces() {
        // Kil(g_a, g_b) = 0 unless a + b = 0, and all root spaces are
        // orthogonal to the complexified Cartan.
        let rd = datum_for("su3");
        let kil = &rd.kil;
        for (i, a) in rd.roots.iter().enumerate() {
            for (j, b) in rd.roots.iter().enumerate() {
                let sum = a.values.clone() + &b.values;
                let v = kil
                    .eval(&rd.root_spaces[i], &rd.root_spaces[j])
                    .unwrap()
                    .norm();
                if sum.amax() > 1e-7 {
                    assert!(v < 1e-9, "roots {i},{j} not orthogonal: {v}");
                } else {
                    assert!(v > 1e-6, "paired roots {i},{j} degenerate: {v}");
                }
            }
            for h in &rd.cartan.basis {
                let v = kil
                    .eval(&rd.root_spaces[i], &ComplexElement::from_real(h))
                    .unwrap()
                    .norm();
                assert!(v < 1e-9);
            }
        }
    }

    #[test]
    fn positives_are_nonneg_simple_combinations() {
        let rd = datum_for("su3");
        let simples: Vec<&Root> = rd.simple_roots().collect();
        for p in rd.positive_roots() {
            // rank-2 solve
            let a = RMatrix::from_fn(2, 2, |r, c| simples[c].values[r]);
            let rhs = RVector::from_fn(2, |r, _| p.values[r]);
            let sol = a.lu().solve(&rhs).unwrap();
            for c in sol.iter() {
                let rounded = c.round();
                assert!((c - rounded).abs() < 1e-9 && rounded >= 0.0);
            }
        }
    }

    #[test]
    fn su3_cartan_matrix() {
        let rd = datum_for("su3");
        let cm = rd.cartan_matrix().unwrap();
        assert_eq!(cm.len(), 2);
        assert_eq!(cm[0][0], 2);
        assert_eq!(cm[1][1], 2);
        assert_eq!(cm[0][1], -1);
        assert_eq!(cm[1][0], -1);
    }

    #[test]
    fn find_cartan_without_builtin_hint() {
        // Round-tripping through the spec drops the builder's Cartan, so
        // the greedy extension path is exercised.
        let a = LieAlgebra::from_spec(&LieAlgebra::su(3).unwrap().to_spec()).unwrap();
        assert!(a.standard_cartan_indices().is_none());
        let h = find_cartan(&a, None).unwrap();
        assert_eq!(h.rank(), 2);
        let rd = compute_roots(&a, &h).unwrap();
        assert_eq!(rd.roots.len(), 6);
    }

    #[test]
    fn find_cartan_respects_maximal_hint() {
        let a = LieAlgebra::su(3).unwrap();
        let std_cartan = find_cartan(&a, None).unwrap();
        let again = find_cartan(&a, Some(&std_cartan.basis)).unwrap();
        assert_eq!(again.rank(), 2);
        // Same span: each returned vector commutes with the standard basis.
        for v in &again.basis {
            for w in &std_cartan.basis {
                assert!((a.ad_real(v) * w).amax() < 1e-12);
            }
        }
    }

    #[test]
    fn find_cartan_rejects_non_abelian_hint() {
        let a = LieAlgebra::su(2).unwrap();
        let x1 = RVector::from_vec(vec![1.0, 0.0, 0.0]);
        let x2 = RVector::from_vec(vec![0.0, 1.0, 0.0]);
        assert!(matches!(
            find_cartan(&a, Some(&[x1, x2])),
            Err(Error::HintNotAbelian(_))
        ));
    }

    #[test]
    fn find_cartan_rejects_degenerate_hint() {
        // Two copies of the same direction commute but span only one
        // dimension, so the hint cannot be extended to a larger abelian
        // span than its own centralizer.
        let a = LieAlgebra::su(2).unwrap();
        let x3 = RVector::from_vec(vec![0.0, 0.0, 1.0]);
        assert!(matches!(
            find_cartan(&a, Some(&[x3.clone(), x3])),
            Err(Error::HintDegenerate(_))
        ));
    }

    #[test]
    fn sl2_triple_rejects_non_root() {
        let rd = datum_for("su2");
        let bogus = Root {
            values: RVector::from_vec(vec![17.0]),
        };
        let kil = rd.kil.clone();
        assert!(matches!(
            sl2_triple(&rd, &bogus, &kil),
            Err(Error::NotARoot)
        ));
    }
}
