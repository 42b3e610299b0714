//! Momentum functional, its dual element, and the stabilizer decomposition.
//!
//! For an irreducible representation with highest weight vector `xi` the
//! momentum functional is `l(X) = -i <xi, pi_X xi>` (inner products linear
//! in the second variable). Its Kil-dual `Z` lies in the Cartan
//! subalgebra; the stabilizer subalgebra `k` is the ad-kernel of `Z` and
//! `m` its Kil-orthocomplement, giving the reductive split `g = k + m`.
//! The classification of `k` by root data — `k` is spanned over the
//! complexified Cartan by the pairs `E, F` of exactly those positive
//! roots with `l(H) = 0` — is re-derived and compared projector-to-
//! projector in [`verify_struk`].
//!
//! Everything is done at the Lie-algebra level; connectivity of the
//! stabilizer group is assumed, not computed.

use crate::algebra::{ComplexElement, KillingForm, LieAlgebra};
use crate::error::{Error, Result};
use crate::irrep::Irrep;
use crate::linalg::{self, CVector, Cf, RVector};
use crate::roots::RootDatum;
use crate::tol::{Tol, INTEGRALITY_TOL};

/// The momentum functional as its values on the real basis of the algebra,
/// extended C-linearly on demand.
#[derive(Debug, Clone)]
pub struct MomentumFunctional {
    pub values: RVector,
}

impl MomentumFunctional {
    pub fn eval_real(&self, x: &RVector) -> f64 {
        self.values.dot(x)
    }

    pub fn eval(&self, w: &ComplexElement) -> Cf {
        w.coeffs.dot(&linalg::vec_to_complex(&self.values))
    }

    /// `i l(H)` for a triple element `H`; real for `H` in `i h`.
    pub fn dynkin_value(&self, h: &ComplexElement) -> f64 {
        (self.eval(h) * Cf::new(0.0, 1.0)).re
    }
}

/// `l(X) = -i <xi, pi_X xi>` on the real basis. Skew-adjointness of the
/// generators makes the values real; the imaginary parts are checked and
/// discarded.
pub fn momentum(irrep: &Irrep) -> Result<MomentumFunctional> {
    let tol = Tol::global();
    let xi = &irrep.highest_vector;
    let n = irrep.rep.dim_algebra();
    let mut values = RVector::zeros(n);
    for k in 0..n {
        let v = xi.dotc(&(&irrep.rep.matrices[k] * xi)) * Cf::new(0.0, -1.0);
        if v.im.abs() > tol.residual * 100.0 {
            return Err(Error::ConstructionFailed(format!(
                "momentum value has imaginary part {:.3e}; generators are not skew-adjoint",
                v.im
            )));
        }
        values[k] = v.re;
    }
    Ok(MomentumFunctional { values })
}

/// The unique element of the algebra with `l(X) = Kil(X, Z)` for all `X`.
pub fn z_diamond(lambda: &MomentumFunctional, kil: &KillingForm) -> Result<RVector> {
    kil.gram
        .clone()
        .cholesky()
        .ok_or(Error::SingularGram)
        .map(|c| c.solve(&lambda.values))
}

/// Which side of the stabilizer split a positive root falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    Stabilizer,
    Complement,
}

/// Stabilizer data of a dual element: `k = ker(ad_Z)`, `m = k^perp`,
/// both with Kil-orthonormal bases, plus the root classification
/// (filled by [`classify_roots`] / [`orbit_data`]; empty from the raw
/// [`stabilizer_split`]).
#[derive(Debug, Clone)]
pub struct OrbitData {
    pub z_diamond: RVector,
    pub k_basis: Vec<RVector>,
    pub m_basis: Vec<RVector>,
    /// Per positive root (in the datum's order): stabilizer or complement.
    pub classified_roots: Vec<RootClass>,
}

impl OrbitData {
    pub fn dim_k(&self) -> usize {
        self.k_basis.len()
    }

    pub fn dim_m(&self) -> usize {
        self.m_basis.len()
    }
}

/// Split `g` into the ad-kernel of `z` and its Kil-orthocomplement.
/// Both factors are verified to bracket correctly (`[k,k] in k`,
/// `[k,m] in m`); the rank decision must be unambiguous at tolerance.
pub fn stabilizer_split(
    algebra: &LieAlgebra,
    z: &RVector,
    kil: &KillingForm,
) -> Result<OrbitData> {
    let tol = Tol::global();
    if z.len() != algebra.dim {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim,
            got: z.len(),
        });
    }
    let ad_z = algebra.ad_real(z);
    let svals = linalg::singular_values(&linalg::to_complex(&ad_z));
    linalg::check_rank_unambiguous(&svals, tol, "stabilizer kernel")?;
    let (k_basis, m_basis) = linalg::gram_kernel_complement(&ad_z, &kil.gram, tol)?;

    // Reductive split: bracket closure via Kil-orthogonality against the
    // complementary factor.
    let scale = 1.0 + z.amax();
    for (i, ki) in k_basis.iter().enumerate() {
        for kj in k_basis.iter().skip(i + 1) {
            let br = algebra.ad_real(ki) * kj;
            for m in &m_basis {
                let v = kil.eval_real(&br, m);
                if v.abs() > tol.residual * scale * 100.0 {
                    return Err(Error::ConstructionFailed(format!(
                        "[k, k] escapes k: Kil residual {v:.3e}"
                    )));
                }
            }
        }
        for mj in &m_basis {
            let br = algebra.ad_real(ki) * mj;
            for kl in &k_basis {
                let v = kil.eval_real(&br, kl);
                if v.abs() > tol.residual * scale * 100.0 {
                    return Err(Error::ConstructionFailed(format!(
                        "[k, m] escapes m: Kil residual {v:.3e}"
                    )));
                }
            }
        }
    }

    Ok(OrbitData {
        z_diamond: z.clone(),
        k_basis,
        m_basis,
        classified_roots: Vec::new(),
    })
}

/// Classify every positive root by whether `i l(H)` vanishes. The values
/// must be integers within tolerance, so the cut sits at one half.
pub fn classify_roots(rd: &RootDatum, lambda: &MomentumFunctional) -> Result<Vec<RootClass>> {
    let mut out = Vec::with_capacity(rd.positives.len());
    for p in 0..rd.positives.len() {
        let v = lambda.dynkin_value(&rd.triple(p).h);
        if (v - v.round()).abs() > INTEGRALITY_TOL {
            return Err(Error::ConstructionFailed(format!(
                "i l(H) = {v} is not an integer at tolerance"
            )));
        }
        out.push(if v.round() == 0.0 {
            RootClass::Stabilizer
        } else {
            RootClass::Complement
        });
    }
    Ok(out)
}

/// Full orbit pipeline for an irreducible representation: momentum, dual
/// element, stabilizer split, and root classification.
pub fn orbit_data(
    algebra: &LieAlgebra,
    rd: &RootDatum,
    irrep: &Irrep,
) -> Result<(MomentumFunctional, OrbitData)> {
    let lambda = momentum(irrep)?;
    let z = z_diamond(&lambda, &rd.kil)?;
    let mut od = stabilizer_split(algebra, &z, &rd.kil)?;
    od.classified_roots = classify_roots(rd, &lambda)?;
    Ok((lambda, od))
}

/// Lemma check for a single positive root.
#[derive(Debug, Clone)]
pub struct RootMembership {
    /// `i l(H)` rounded.
    pub pairing: i64,
    /// Distances of `E` and `F` from the stabilizer span.
    pub e_residual: f64,
    pub f_residual: f64,
    /// Both directions of the biconditional hold.
    pub consistent: bool,
}

/// Report comparing the computed stabilizer with its root-data description.
#[derive(Debug, Clone)]
pub struct StabilizerReport {
    /// Operator-norm distance between the ad-kernel projector and the
    /// projector onto the Cartan plus stabilizer-root span.
    pub k_projector_distance: f64,
    /// Same comparison for the complement.
    pub m_projector_distance: f64,
    pub memberships: Vec<RootMembership>,
    pub dim_k: usize,
    pub dim_m: usize,
    pub passed: bool,
}

/// Verify the span description of the stabilizer: `k` complexified equals
/// the Cartan plus the span of the `E, F` pairs of roots with `l(H) = 0`,
/// and `m` complexified is spanned by the remaining pairs. The membership
/// lemma is checked root by root in both directions.
pub fn verify_struk(
    od: &OrbitData,
    rd: &RootDatum,
    lambda: &MomentumFunctional,
) -> Result<StabilizerReport> {
    let tol = Tol::global();
    let n = rd.algebra.dim;
    let classes = if od.classified_roots.len() == rd.positives.len() {
        od.classified_roots.clone()
    } else {
        classify_roots(rd, lambda)?
    };

    // Span description of k^C and m^C from the root data.
    let mut k_span: Vec<CVector> = rd
        .cartan
        .basis
        .iter()
        .map(linalg::vec_to_complex)
        .collect();
    let mut m_span: Vec<CVector> = Vec::new();
    for (p, class) in classes.iter().enumerate() {
        let t = rd.triple(p);
        match class {
            RootClass::Stabilizer => {
                k_span.push(t.e.coeffs.clone());
                k_span.push(t.f.coeffs.clone());
            }
            RootClass::Complement => {
                m_span.push(t.e.coeffs.clone());
                m_span.push(t.f.coeffs.clone());
            }
        }
    }
    let p_k_span = linalg::projector(&k_span, n);
    let p_m_span = linalg::projector(&m_span, n);

    // Projectors from the computed ad-kernel split (complexified).
    let k_cols: Vec<CVector> = od.k_basis.iter().map(linalg::vec_to_complex).collect();
    let m_cols: Vec<CVector> = od.m_basis.iter().map(linalg::vec_to_complex).collect();
    let p_k = linalg::projector(&k_cols, n);
    let p_m = linalg::projector(&m_cols, n);

    let k_projector_distance = linalg::projector_distance(&p_k, &p_k_span);
    let m_projector_distance = linalg::projector_distance(&p_m, &p_m_span);

    // Membership lemma, both directions, root by root.
    let member_tol = 1e-7;
    let mut memberships = Vec::with_capacity(classes.len());
    let mut all_consistent = true;
    for p in 0..classes.len() {
        let t = rd.triple(p);
        let v = lambda.dynkin_value(&t.h).round() as i64;
        let e_res = (&t.e.coeffs - &p_k * &t.e.coeffs).norm();
        let f_res = (&t.f.coeffs - &p_k * &t.f.coeffs).norm();
        let in_k = e_res < member_tol || f_res < member_tol;
        // forward: l(H) = 0 => both inside; converse: either inside => l(H) = 0
        let forward_ok = v != 0 || (e_res < member_tol && f_res < member_tol);
        let converse_ok = !in_k || v == 0;
        let consistent = forward_ok && converse_ok;
        all_consistent &= consistent;
        memberships.push(RootMembership {
            pairing: v,
            e_residual: e_res,
            f_residual: f_res,
            consistent,
        });
    }

    let passed = k_projector_distance < tol.residual
        && m_projector_distance < tol.residual
        && all_consistent;
    Ok(StabilizerReport {
        k_projector_distance,
        m_projector_distance,
        memberships,
        dim_k: od.dim_k(),
        dim_m: od.dim_m(),
        passed,
    })
}
