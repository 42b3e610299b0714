//! First-order differential calculus on the matrix algebra of an
//! irreducible representation.
//!
//! With `B` the full matrix algebra on the representation space, the
//! derivation is `(dT)(X) = [pi_X, T]`, taking values in `B (x) g'`.
//! The kernel of `pi` is an ideal `g_o`; its Kil-orthocomplement `g_l`
//! is the complementary ideal and `pi` is faithful on it. The bimodule
//! generated by the range of `d` is decided through the span `Q` of the
//! scalar functionals `X -> <eta, [T, X] zeta>`: rank-one operators
//! suffice for the bimodule sweep, which reduces the bimodule statement
//! to `dim Q = dim g_l`. The direct bimodule-span rank over all matrix
//! unit triples is kept as an optional, budgeted corroboration.

use crate::algebra::{ComplexElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::irrep::{build_irrep, HighestWeight, Irrep};
use crate::linalg::{self, CMatrix, CVector, Cf, RMatrix, RVector};
use crate::roots::RootDatum;
use crate::tol::Tol;

/// Rank-one operator `<ket, bra>_o` acting by `zeta -> ket <bra, zeta>`,
/// inner product linear in the second variable.
#[derive(Debug, Clone)]
pub struct RankOne {
    pub ket: CVector,
    pub bra: CVector,
}

impl RankOne {
    pub fn apply(&self, zeta: &CVector) -> CVector {
        &self.ket * self.bra.dotc(zeta)
    }

    pub fn matrix(&self) -> CMatrix {
        &self.ket * self.bra.adjoint()
    }
}

/// Default cell budget (rows times columns of the stacked generator
/// matrix) under which the direct bimodule-span corroboration runs
/// automatically inside [`verify_main_theorem`].
pub const DEFAULT_BIMODULE_BUDGET: usize = 4096;

/// Kernel-ideal decomposition `g = g_l (+) g_o` for a representation:
/// `g_o` is the numerical kernel of `X -> pi_X` and `g_l` its
/// Kil-orthocomplement. Both bases are Kil-orthonormal, both factors are
/// verified to be ideals, and the rank decision must be unambiguous.
pub fn kernel_ideal(
    algebra: &LieAlgebra,
    irrep: &Irrep,
) -> Result<(Vec<RVector>, Vec<RVector>)> {
    let tol = Tol::global();
    let (g_o, g_l, _) = kernel_ideal_inner(algebra, irrep, tol)?;
    Ok((g_o, g_l))
}

fn kernel_ideal_inner(
    algebra: &LieAlgebra,
    irrep: &Irrep,
    tol: Tol,
) -> Result<(Vec<RVector>, Vec<RVector>, bool)> {
    let n = algebra.dim;
    if irrep.rep.dim_algebra() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: irrep.rep.dim_algebra(),
        });
    }
    let nrep = irrep.dim();
    let mut flat = RMatrix::zeros(2 * nrep * nrep, n);
    for (k, m) in irrep.rep.matrices.iter().enumerate() {
        for (idx, c) in m.iter().enumerate() {
            flat[(idx, k)] = c.re;
            flat[(nrep * nrep + idx, k)] = c.im;
        }
    }
    let svals = linalg::singular_values(&linalg::to_complex(&flat));
    linalg::check_rank_unambiguous(&svals, tol, "representation kernel")?;
    let stable = {
        let r0 = linalg::rank_from_singular_values(&svals, tol.rank_rel);
        let lo = linalg::rank_from_singular_values(&svals, tol.rank_rel / 10.0);
        let hi = linalg::rank_from_singular_values(&svals, tol.rank_rel * 10.0);
        r0 == lo && r0 == hi
    };
    let kil = crate::algebra::KillingForm::of(algebra);
    let (g_o, g_l) = linalg::gram_kernel_complement(&flat, &kil.gram, tol)?;

    // Both factors must be ideals: [g, g_o] stays Kil-orthogonal to g_l,
    // and the two ideals annihilate each other.
    for u in &g_o {
        for i in 0..n {
            let br = algebra.ad_basis(i) * u;
            for v in &g_l {
                let w = kil.eval_real(&br, v);
                if w.abs() > 100.0 * tol.residual {
                    return Err(Error::ConstructionFailed(format!(
                        "[g, g_o] escapes g_o: Kil residual {w:.3e}"
                    )));
                }
            }
        }
        for v in &g_l {
            let br = algebra.ad_real(u) * v;
            if br.amax() > 100.0 * tol.residual {
                return Err(Error::ConstructionFailed(format!(
                    "[g_l, g_o] is nonzero: residual {:.3e}",
                    br.amax()
                )));
            }
        }
    }
    Ok((g_o, g_l, stable))
}

/// The derivation data for one representation: the matrix algebra `B`,
/// the action `[pi_X, .]`, and the ideal split of the algebra.
#[derive(Debug, Clone)]
pub struct DerivationCalculus {
    pub algebra: LieAlgebra,
    pub rep: Irrep,
    pub g_o_basis: Vec<RVector>,
    pub g_lambda_basis: Vec<RVector>,
    kernel_rank_stable: bool,
}

impl DerivationCalculus {
    pub fn new(algebra: &LieAlgebra, rep: Irrep) -> Result<Self> {
        let tol = Tol::global();
        let (g_o_basis, g_lambda_basis, kernel_rank_stable) =
            kernel_ideal_inner(algebra, &rep, tol)?;
        Ok(DerivationCalculus {
            algebra: algebra.clone(),
            rep,
            g_o_basis,
            g_lambda_basis,
            kernel_rank_stable,
        })
    }

    pub fn dim_space(&self) -> usize {
        self.rep.dim()
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim
    }

    pub fn dim_g_o(&self) -> usize {
        self.g_o_basis.len()
    }

    pub fn dim_g_lambda(&self) -> usize {
        self.g_lambda_basis.len()
    }

    /// The derivation applied to one matrix: `X -> [pi_X, T]`.
    pub fn d(&self, t: &CMatrix) -> Result<Differential> {
        let n = self.dim_space();
        if t.nrows() != n || t.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.nrows().max(t.ncols()),
            });
        }
        let blocks = self
            .rep
            .matrices()
            .iter()
            .map(|pi| pi * t - t * pi)
            .collect();
        Ok(Differential { blocks })
    }
}

/// Value of the derivation on one matrix, as the tuple of commutators
/// against the basis generators; evaluation extends C-linearly.
#[derive(Debug, Clone)]
pub struct Differential {
    blocks: Vec<CMatrix>,
}

impl Differential {
    pub fn eval_basis(&self, k: usize) -> &CMatrix {
        &self.blocks[k]
    }

    pub fn eval(&self, w: &ComplexElement) -> CMatrix {
        let n = self.blocks[0].nrows();
        let mut m = CMatrix::zeros(n, n);
        for (k, b) in self.blocks.iter().enumerate() {
            if w.coeffs[k] != Cf::new(0.0, 0.0) {
                m += b * w.coeffs[k];
            }
        }
        m
    }

    /// Largest value norm over a set of real directions.
    pub fn max_norm_on(&self, dirs: &[RVector]) -> f64 {
        dirs.iter()
            .map(|v| self.eval(&ComplexElement::from_real(v)).norm())
            .fold(0.0, f64::max)
    }
}

/// Witness functional audit: the two families from the span argument,
/// their structural zero pattern, and their membership in the computed
/// row space of `Q`.
#[derive(Debug, Clone)]
pub struct WitnessCheck {
    /// Position of the root among the positives.
    pub root_index: usize,
    /// 1: `X -> <xi, [E, X] F xi>` hitting the Cartan directions;
    /// 2: `X -> <xi, [E, X] xi>` hitting the lowering direction.
    pub family: u8,
    /// Relative residual of the least-squares projection onto the row
    /// space of the `Q` stack.
    pub span_residual: f64,
    /// The expected vanishing / non-vanishing pattern holds.
    pub structure_ok: bool,
}

/// Report of the cotangent-span verification.
#[derive(Debug, Clone)]
pub struct CotangentReport {
    pub dim_g: usize,
    pub dim_g_o: usize,
    pub dim_g_lambda: usize,
    pub dim_q: usize,
    pub dim_bimodule: Option<usize>,
    /// `dim Q = dim g_l`, and the bimodule count matches when computed.
    pub verdict: bool,
    /// The zero weight: the statement holds vacuously.
    pub trivial: bool,
    /// Rank decisions unchanged under cutoff perturbation by 10 either way.
    pub rank_stable: bool,
    pub witnesses: Vec<WitnessCheck>,
    /// Largest singular value discarded by the rank cut, over the largest
    /// kept one (0 when everything is kept).
    pub q_rank_gap: f64,
}

impl CotangentReport {
    pub fn witnesses_ok(&self) -> bool {
        self.witnesses
            .iter()
            .all(|w| w.span_residual < 1e-8 && w.structure_ok)
    }
}

/// Stack of scalar functionals `X -> <eta, [T, X] zeta>` as rows over the
/// algebra basis, for the given vectors and operators.
fn q_stack(
    matrices: &[CMatrix],
    etas: &[CVector],
    zetas: &[CVector],
    t_ops: &[CMatrix],
) -> CMatrix {
    let n = matrices.len();
    let rows = etas.len() * zetas.len() * t_ops.len();
    let mut stack = CMatrix::zeros(rows, n);
    let mut r = 0;
    for eta in etas {
        for zeta in zetas {
            // cache pi_k zeta and pi_k eta
            let pz: Vec<CVector> = matrices.iter().map(|m| m * zeta).collect();
            let pe: Vec<CVector> = matrices.iter().map(|m| m * eta).collect();
            for t in t_ops {
                let t_zeta = t * zeta;
                let th_eta = t.adjoint() * eta;
                for k in 0..n {
                    // <eta, T pi_k zeta> - <eta, pi_k T zeta>
                    //   = <T^* eta, pi_k zeta> + <pi_k eta, T zeta>
                    let v = th_eta.dotc(&pz[k]) + pe[k].dotc(&t_zeta);
                    stack[(r, k)] = v;
                }
                r += 1;
            }
        }
    }
    stack
}

fn weight_basis(rep: &Irrep) -> Vec<CVector> {
    rep.weights
        .iter()
        .flat_map(|ws| ws.basis.iter().cloned())
        .collect()
}

fn matrix_units(n: usize) -> Vec<CMatrix> {
    let mut units = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let ket = CVector::from_fn(n, |i, _| {
                if i == p {
                    Cf::new(1.0, 0.0)
                } else {
                    Cf::new(0.0, 0.0)
                }
            });
            let bra = CVector::from_fn(n, |i, _| {
                if i == q {
                    Cf::new(1.0, 0.0)
                } else {
                    Cf::new(0.0, 0.0)
                }
            });
            units.push(RankOne { ket, bra }.matrix());
        }
    }
    units
}

/// Dimension of the span `Q` of the functionals `X -> <eta, [T, X] zeta>`,
/// sweeping `eta, zeta` over the weight-vector basis and `T` over matrix
/// units. Returns the report with `dim_q`, the rank-stability flag, and
/// the witness audit left empty.
pub fn q_span(calc: &DerivationCalculus) -> CotangentReport {
    let tol = Tol::global();
    let etas = weight_basis(&calc.rep);
    let units = matrix_units(calc.dim_space());
    let stack = q_stack(calc.rep.matrices(), &etas, &etas, &units);
    let svals = linalg::singular_values(&stack);
    let dim_q = linalg::rank_from_singular_values(&svals, tol.rank_rel);
    let lo = linalg::rank_from_singular_values(&svals, tol.rank_rel / 10.0);
    let hi = linalg::rank_from_singular_values(&svals, tol.rank_rel * 10.0);
    let q_rank_gap = rank_gap(&svals, dim_q);
    CotangentReport {
        dim_g: calc.dim_g(),
        dim_g_o: calc.dim_g_o(),
        dim_g_lambda: calc.dim_g_lambda(),
        dim_q,
        dim_bimodule: None,
        verdict: dim_q == calc.dim_g_lambda(),
        trivial: calc.dim_g_lambda() == 0,
        rank_stable: dim_q == lo && dim_q == hi && calc.kernel_rank_stable,
        witnesses: Vec::new(),
        q_rank_gap,
    }
}

fn rank_gap(svals: &[f64], rank: usize) -> f64 {
    if rank == 0 || rank >= svals.len() {
        return 0.0;
    }
    svals[rank] / svals[rank - 1].max(f64::MIN_POSITIVE)
}

/// Direct rank of the bimodule generated by the range of the derivation
/// inside `Hom(g, B)`, sweeping `R, S, T` over all matrix units. The
/// stacked matrix has `N^6` rows and `dim g * N^2` columns; the call is
/// refused when `rows * cols` exceeds the budget.
pub fn bimodule_span(calc: &DerivationCalculus, budget: usize) -> Result<usize> {
    let tol = Tol::global();
    let n = calc.dim_space();
    let dim_g = calc.dim_g();
    let rows = n.pow(6);
    let cols = dim_g * n * n;
    let needed = rows.saturating_mul(cols);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    // Row for (R, S, T) = (E_{r1 r2}, E_{s1 s2}, E_{t1 t2}):
    // block k holds R [pi_k, T] S = ([pi_k, T])[r2, s1] E_{r1 s2}.
    let mut stack = CMatrix::zeros(rows, cols);
    let pis = calc.rep.matrices();
    let mut row = 0;
    for t1 in 0..n {
        for t2 in 0..n {
            // M_k = [pi_k, E_{t1 t2}] entries needed: M_k[r2, s1]
            for r1 in 0..n {
                for r2 in 0..n {
                    for s1 in 0..n {
                        for s2 in 0..n {
                            for (k, pi) in pis.iter().enumerate() {
                                // (pi E_{t1t2})[r2,s1] = pi[r2,t1] d_{t2 s1}
                                // (E_{t1t2} pi)[r2,s1] = d_{r2 t1} pi[t2,s1]
                                let mut v = Cf::new(0.0, 0.0);
                                if s1 == t2 {
                                    v += pi[(r2, t1)];
                                }
                                if r2 == t1 {
                                    v -= pi[(t2, s1)];
                                }
                                if v != Cf::new(0.0, 0.0) {
                                    stack[(row, k * n * n + r1 * n + s2)] = v;
                                }
                            }
                            row += 1;
                        }
                    }
                }
            }
        }
    }
    let svals = linalg::singular_values(&stack);
    Ok(linalg::rank_from_singular_values(&svals, tol.rank_rel))
}

/// Find the proof's sl(2)-highest vector for a positive root: scan the
/// weight basis for a vector not killed by the lowering operator, then
/// raise until the raising operator kills it. Returns `None` when the
/// root acts trivially (its pair lies in the kernel ideal).
fn sl2_highest_vector(
    rep: &Irrep,
    e_mat: &CMatrix,
    f_mat: &CMatrix,
) -> Option<CVector> {
    if linalg::opnorm(f_mat) < 1e-9 {
        return None;
    }
    let basis = weight_basis(rep);
    let seed = basis.iter().find(|b| (f_mat * *b).norm() > 1e-6)?;
    let mut xi = seed.clone();
    for _ in 0..=rep.dim() {
        let up = e_mat * &xi;
        if up.norm() < 1e-8 {
            break;
        }
        xi = &up / Cf::new(up.norm(), 0.0);
    }
    if (f_mat * &xi).norm() < 1e-8 {
        return None;
    }
    Some(xi)
}

/// Witness rows and their structural zero-pattern checks for one root.
fn witness_checks(
    calc: &DerivationCalculus,
    rd: &RootDatum,
    p: usize,
    row_space: &CMatrix,
    kept: usize,
) -> Vec<WitnessCheck> {
    let triple = rd.triple(p);
    let e_mat = calc.rep.of_element(&triple.e);
    let f_mat = calc.rep.of_element(&triple.f);
    let Some(xi) = sl2_highest_vector(&calc.rep, &e_mat, &f_mat) else {
        return Vec::new();
    };
    let n = calc.dim_g();
    let pis = calc.rep.matrices();

    let row_for = |target: &CVector| -> CVector {
        CVector::from_fn(n, |k, _| {
            xi.dotc(&((&e_mat * &pis[k] - &pis[k] * &e_mat) * target))
        })
    };
    let w1 = row_for(&(&f_mat * &xi));
    let w2 = row_for(&xi);

    let eval = |row: &CVector, w: &ComplexElement| -> Cf {
        w.coeffs.iter().zip(row.iter()).map(|(c, r)| c * r).sum()
    };

    // Family 1: restriction to the Cartan is a nonzero multiple of the
    // root; zero on every raising and lowering direction.
    let alpha = &rd.roots[rd.positives[p]];
    let mut c_ratio = Cf::new(0.0, 0.0);
    let mut best = 0.0;
    for (j, h) in rd.cartan.basis.iter().enumerate() {
        if alpha.values[j].abs() > best {
            best = alpha.values[j].abs();
            c_ratio = eval(&w1, &ComplexElement::from_real(h)) / Cf::new(alpha.values[j], 0.0);
        }
    }
    let mut s1_ok = c_ratio.norm() > 1e-8;
    for (j, h) in rd.cartan.basis.iter().enumerate() {
        let v = eval(&w1, &ComplexElement::from_real(h));
        if (v - c_ratio * Cf::new(alpha.values[j], 0.0)).norm() > 1e-7 {
            s1_ok = false;
        }
    }
    for q in 0..rd.positives.len() {
        let t = rd.triple(q);
        if eval(&w1, &t.e).norm() > 1e-7 || eval(&w1, &t.f).norm() > 1e-7 {
            s1_ok = false;
        }
    }

    // Family 2: vanishes on the Cartan, on every raising direction, and on
    // all lowering directions but this root's own, where it is nonzero.
    let mut s2_ok = true;
    for h in &rd.cartan.basis {
        if eval(&w2, &ComplexElement::from_real(h)).norm() > 1e-7 {
            s2_ok = false;
        }
    }
    for q in 0..rd.positives.len() {
        let t = rd.triple(q);
        if eval(&w2, &t.e).norm() > 1e-7 {
            s2_ok = false;
        }
        let fv = eval(&w2, &t.f).norm();
        if q == p {
            if fv < 1e-8 {
                s2_ok = false;
            }
        } else if fv > 1e-7 {
            s2_ok = false;
        }
    }

    let project = |row: &CVector| -> f64 {
        if row.norm() == 0.0 {
            return 0.0;
        }
        // rows of `row_space` (v^T) with index < kept span the row space
        let mut residual = row.clone();
        for i in 0..kept {
            let v = row_space.row(i).transpose().map(|c: Cf| c.conj());
            let coef = v.dotc(&residual);
            residual -= v * coef;
        }
        residual.norm() / row.norm()
    };

    vec![
        WitnessCheck {
            root_index: p,
            family: 1,
            span_residual: project(&w1),
            structure_ok: s1_ok,
        },
        WitnessCheck {
            root_index: p,
            family: 2,
            span_residual: project(&w2),
            structure_ok: s2_ok,
        },
    ]
}

/// Full pipeline: build the representation, split off the kernel ideal,
/// compute `dim Q`, corroborate with the direct bimodule rank when it fits
/// the budget, and audit the two witness families for every acting root.
pub fn verify_main_theorem(
    algebra: &LieAlgebra,
    rd: &RootDatum,
    weight: &HighestWeight,
) -> Result<CotangentReport> {
    let irrep = build_irrep(algebra, rd, weight)?;
    verify_main_theorem_on(algebra, rd, irrep)
}

/// Same as [`verify_main_theorem`] for an already-built representation.
pub fn verify_main_theorem_on(
    algebra: &LieAlgebra,
    rd: &RootDatum,
    irrep: Irrep,
) -> Result<CotangentReport> {
    let tol = Tol::global();
    let calc = DerivationCalculus::new(algebra, irrep)?;

    let etas = weight_basis(&calc.rep);
    let units = matrix_units(calc.dim_space());
    let stack = q_stack(calc.rep.matrices(), &etas, &etas, &units);
    let svd = stack.clone().svd(false, true);
    let mut svals: Vec<f64> = svd.singular_values.iter().cloned().collect();
    svals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let dim_q = linalg::rank_from_singular_values(&svals, tol.rank_rel);
    let lo = linalg::rank_from_singular_values(&svals, tol.rank_rel / 10.0);
    let hi = linalg::rank_from_singular_values(&svals, tol.rank_rel * 10.0);
    let rank_stable = dim_q == lo && dim_q == hi && calc.kernel_rank_stable;
    let q_rank_gap = rank_gap(&svals, dim_q);

    // Right singular rows spanning the row space, for witness projection.
    let v_t = svd.v_t.expect("svd with v requested");

    let mut witnesses = Vec::new();
    for p in 0..rd.positives.len() {
        witnesses.extend(witness_checks(&calc, rd, p, &v_t, dim_q));
    }

    let dim_bimodule = match bimodule_span(&calc, DEFAULT_BIMODULE_BUDGET) {
        Ok(d) => Some(d),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    let n2 = calc.dim_space() * calc.dim_space();
    let verdict = dim_q == calc.dim_g_lambda()
        && dim_bimodule
            .map(|d| d == n2 * calc.dim_g_lambda())
            .unwrap_or(true);

    Ok(CotangentReport {
        dim_g: calc.dim_g(),
        dim_g_o: calc.dim_g_o(),
        dim_g_lambda: calc.dim_g_lambda(),
        dim_q,
        dim_bimodule,
        verdict,
        trivial: calc.dim_g_lambda() == 0,
        rank_stable,
        witnesses,
        q_rank_gap,
    })
}
