//! Dense numerical helpers: rank and kernel decisions, orthonormal bases,
//! projectors, and simultaneous diagonalization of commuting self-adjoint
//! families.
//!
//! Every rank decision in the crate funnels through [`rank_from_singular_values`]
//! so that the cutoff policy lives in exactly one place.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::Tol;

pub type Cf = Complex64;
pub type CMatrix = DMatrix<Cf>;
pub type CVector = DVector<Cf>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

/// Number of singular values above `rank_rel * sigma_max`.
pub fn rank_from_singular_values(svals: &[f64], rank_rel: f64) -> usize {
    let smax = svals.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svals.iter().filter(|&&s| s > rank_rel * smax).count()
}

/// Singular values of a complex matrix, descending.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().cloned().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

pub fn svd_rank(m: &CMatrix, tol: Tol) -> usize {
    rank_from_singular_values(&singular_values(m), tol.rank_rel)
}

/// Error when a singular value falls inside the ambiguity band
/// `(rank_rel * smax, 10 * rank_rel * smax)`: the rank decision would
/// depend on the exact cutoff, which callers must refuse to guess.
pub fn check_rank_unambiguous(svals: &[f64], tol: Tol, context: &str) -> Result<()> {
    let smax = svals.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return Ok(());
    }
    for &s in svals {
        if s > tol.rank_rel * smax && s < 10.0 * tol.rank_rel * smax {
            return Err(Error::RankAmbiguous(format!(
                "{context}: singular value {s:.3e} sits in the cutoff band around {:.3e}",
                tol.rank_rel * smax
            )));
        }
    }
    Ok(())
}

/// Operator norm (largest singular value).
pub fn opnorm(m: &CMatrix) -> f64 {
    singular_values(m).first().cloned().unwrap_or(0.0)
}

pub fn opnorm_real(m: &RMatrix) -> f64 {
    opnorm(&to_complex(m))
}

pub fn to_complex(m: &RMatrix) -> CMatrix {
    m.map(|x| Cf::new(x, 0.0))
}

pub fn vec_to_complex(v: &RVector) -> CVector {
    v.map(|x| Cf::new(x, 0.0))
}

/// Hermitian symmetrization, killing numerical drift.
fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * Cf::new(0.5, 0.0)
}

/// Pad with zero rows so the thin SVD carries the full set of right
/// singular vectors (needed to read kernels of wide matrices).
fn pad_rows_real(a: &RMatrix) -> RMatrix {
    if a.nrows() >= a.ncols() {
        return a.clone();
    }
    let mut padded = RMatrix::zeros(a.ncols(), a.ncols());
    padded.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    padded
}

fn pad_rows_complex(a: &CMatrix) -> CMatrix {
    if a.nrows() >= a.ncols() {
        return a.clone();
    }
    let mut padded = CMatrix::zeros(a.ncols(), a.ncols());
    padded.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    padded
}

/// Orthonormal kernel basis of a real matrix (columns as domain vectors).
pub fn real_kernel(a: &RMatrix, tol: Tol) -> Vec<RVector> {
    let n = a.ncols();
    if n == 0 {
        return Vec::new();
    }
    if a.nrows() == 0 {
        return (0..n).map(|i| RVector::from_fn(n, |j, _| if i == j { 1.0 } else { 0.0 })).collect();
    }
    let svd = pad_rows_real(a).svd(false, true);
    let vt = svd.v_t.unwrap();
    let svals = svd.singular_values;
    let smax = svals.iter().cloned().fold(0.0_f64, f64::max);
    let mut kernel = Vec::new();
    for i in 0..n {
        let s = if i < svals.len() { svals[i] } else { 0.0 };
        if smax == 0.0 || s <= tol.rank_rel * smax {
            kernel.push(vt.row(i).transpose());
        }
    }
    kernel
}

/// Orthonormal kernel basis of a complex matrix.
pub fn complex_kernel(a: &CMatrix, tol: Tol) -> Vec<CVector> {
    let n = a.ncols();
    if n == 0 {
        return Vec::new();
    }
    let svd = pad_rows_complex(a).svd(false, true);
    let vt = svd.v_t.unwrap();
    let svals = svd.singular_values;
    let smax = svals.iter().cloned().fold(0.0_f64, f64::max);
    let mut kernel = Vec::new();
    for i in 0..n {
        let s = if i < svals.len() { svals[i] } else { 0.0 };
        if smax == 0.0 || s <= tol.rank_rel * smax {
            kernel.push(vt.row(i).adjoint());
        }
    }
    kernel
}

/// Split the domain of a real linear map `a : R^n -> R^m` into the kernel and
/// its orthogonal complement with respect to the inner product given by the
/// symmetric positive-definite `gram`. Both returned bases are orthonormal
/// for `gram`.
///
/// Works in the Cholesky-transformed coordinates `y = L^T x` where `gram`
/// becomes the identity, so the complement split is an exact SVD split.
pub fn gram_kernel_complement(
    a: &RMatrix,
    gram: &RMatrix,
    tol: Tol,
) -> Result<(Vec<RVector>, Vec<RVector>)> {
    let n = a.ncols();
    if gram.nrows() != n || gram.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: gram.nrows(),
        });
    }
    let chol = gram.clone().cholesky().ok_or(Error::SingularGram)?;
    let l = chol.l();
    // a_tilde = a * L^{-T}
    let mut lt_inv = RMatrix::identity(n, n);
    l.transpose().solve_upper_triangular_mut(&mut lt_inv);
    let a_tilde = a * &lt_inv;
    let svd = pad_rows_real(&a_tilde).svd(false, true);
    let vt = svd.v_t.unwrap();
    let svals = svd.singular_values;
    let smax = svals.iter().cloned().fold(0.0_f64, f64::max);
    let mut kernel = Vec::new();
    let mut complement = Vec::new();
    for i in 0..n {
        let s = if i < svals.len() { svals[i] } else { 0.0 };
        let y = vt.row(i).transpose();
        let x = &lt_inv * y;
        if smax == 0.0 || s <= tol.rank_rel * smax {
            kernel.push(x);
        } else {
            complement.push(x);
        }
    }
    Ok((kernel, complement))
}

/// Modified Gram-Schmidt with a re-orthogonalization pass. Drops vectors whose
/// residual after projection is below `drop_tol` (absolute).
pub fn orthonormal_basis(vecs: &[CVector], drop_tol: f64) -> Vec<CVector> {
    let mut basis: Vec<CVector> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&w);
                w -= b * c;
            }
        }
        let norm = w.norm();
        if norm > drop_tol {
            basis.push(w / Cf::new(norm, 0.0));
        }
    }
    basis
}

/// Orthogonal projector onto the span of the given (not necessarily
/// orthonormal) vectors.
pub fn projector(vecs: &[CVector], dim: usize) -> CMatrix {
    let basis = orthonormal_basis(vecs, 1e-12);
    let mut p = CMatrix::zeros(dim, dim);
    for b in &basis {
        p += b * b.adjoint();
    }
    p
}

/// Operator-norm distance between two projectors (basis-independent
/// subspace comparison).
pub fn projector_distance(p1: &CMatrix, p2: &CMatrix) -> f64 {
    opnorm(&(p1 - p2))
}

/// Least-squares solve `a x = b` via SVD pseudoinverse; returns the solution
/// and the residual norm `|a x - b|`.
pub fn lstsq(a: &CMatrix, b: &CVector) -> (CVector, f64) {
    let svd = a.clone().svd(true, true);
    let x = svd.solve(b, 1e-13).expect("svd solve");
    let res = (a * &x - b).norm();
    (x, res)
}

/// Simultaneous eigenbasis of a family of commuting self-adjoint matrices.
///
/// Returns a unitary whose columns are joint eigenvectors, together with
/// the vector of eigenvalues (one per input matrix) attached to each column.
/// Eigenvalues are clustered with the relative tolerance `cluster_tol`;
/// a gap falling inside the ambiguity band `(eps, 10 eps)` is reported as
/// an error rather than silently resolved.
pub fn simultaneous_eigenbasis(
    mats: &[CMatrix],
    cluster_tol: f64,
) -> Result<(CMatrix, Vec<RVector>)> {
    let depth = mats.len();
    if depth == 0 {
        return Err(Error::AmbiguousClustering("empty matrix family".into()));
    }
    let n = mats[0].nrows();
    let scale = mats
        .iter()
        .flat_map(|m| m.iter())
        .map(|c| c.norm())
        .fold(1.0_f64, f64::max);
    let (u, evs) = simdiag_rec(mats, cluster_tol * scale)?;
    debug_assert_eq!(u.ncols(), n);
    let weights = (0..n)
        .map(|j| RVector::from_fn(depth, |k, _| evs[j][k]))
        .collect();
    Ok((u, weights))
}

fn simdiag_rec(mats: &[CMatrix], eps: f64) -> Result<(CMatrix, Vec<Vec<f64>>)> {
    let n = mats[0].nrows();
    if n == 0 {
        return Ok((CMatrix::zeros(0, 0), Vec::new()));
    }
    let first = hermitize(&mats[0]);
    let se = first.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());

    // Detect ambiguous gaps before clustering.
    for w in order.windows(2) {
        let gap = (se.eigenvalues[w[1]] - se.eigenvalues[w[0]]).abs();
        if gap > eps && gap < 10.0 * eps {
            return Err(Error::AmbiguousClustering(format!(
                "eigenvalue gap {gap:.3e} falls inside the ambiguity band around {eps:.3e}"
            )));
        }
    }

    let mut u_cols: Vec<CVector> = Vec::with_capacity(n);
    let mut weights: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n
            && (se.eigenvalues[order[end]] - se.eigenvalues[order[end - 1]]).abs() <= eps
        {
            end += 1;
        }
        let k = end - start;
        let cluster_val = order[start..end]
            .iter()
            .map(|&i| se.eigenvalues[i])
            .sum::<f64>()
            / k as f64;
        let mut v_c = CMatrix::zeros(n, k);
        for (c, &i) in order[start..end].iter().enumerate() {
            v_c.set_column(c, &se.eigenvectors.column(i));
        }
        if mats.len() == 1 {
            for c in 0..k {
                u_cols.push(v_c.column(c).into_owned());
                weights.push(vec![cluster_val]);
            }
        } else {
            let rest: Vec<CMatrix> = mats[1..]
                .iter()
                .map(|m| hermitize(&(v_c.adjoint() * m * &v_c)))
                .collect();
            let (u_sub, w_sub) = simdiag_rec(&rest, eps)?;
            let lifted = &v_c * &u_sub;
            for (c, sub) in w_sub.iter().enumerate().take(k) {
                u_cols.push(lifted.column(c).into_owned());
                let mut w = vec![cluster_val];
                w.extend_from_slice(sub);
                weights.push(w);
            }
        }
        start = end;
    }
    let mut u = CMatrix::zeros(n, n);
    for (j, col) in u_cols.iter().enumerate() {
        u.set_column(j, col);
    }
    Ok((u, weights))
}

/// Group column indices whose attached weight vectors agree within
/// `cluster_tol` relative to the largest weight magnitude present.
pub fn group_by_weight(weights: &[RVector], cluster_tol: f64) -> Vec<(RVector, Vec<usize>)> {
    let scale = weights
        .iter()
        .map(|w| w.amax())
        .fold(1.0_f64, f64::max);
    let eps = cluster_tol * scale;
    let mut groups: Vec<(RVector, Vec<usize>)> = Vec::new();
    for (j, w) in weights.iter().enumerate() {
        if let Some((rep, idxs)) = groups.iter_mut().find(|(rep, _)| (rep.clone() - w).amax() <= eps)
        {
            idxs.push(j);
            // running mean keeps the representative centered
            let k = idxs.len() as f64;
            *rep = rep.clone() * ((k - 1.0) / k) + w * (1.0 / k);
        } else {
            groups.push((w.clone(), vec![j]));
        }
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(rows: usize, cols: usize, data: &[(f64, f64)]) -> CMatrix {
        CMatrix::from_iterator(rows, cols, data.iter().map(|&(re, im)| Cf::new(re, im)))
    }

    #[test]
    fn rank_of_rank_one() {
        let m = cm(2, 2, &[(1.0, 0.0), (2.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert_eq!(svd_rank(&m, Tol::default()), 1);
    }

    #[test]
    fn kernel_dimensions() {
        let a = RMatrix::from_row_slice(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        let k = real_kernel(&a, Tol::default());
        assert_eq!(k.len(), 1);
        assert!((k[0][2].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gram_split_is_orthogonal() {
        let a = RMatrix::from_row_slice(1, 2, &[1.0, 0.0]);
        let gram = RMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let (ker, comp) = gram_kernel_complement(&a, &gram, Tol::default()).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(comp.len(), 1);
        let ip = (gram.clone() * &ker[0]).dot(&comp[0]);
        assert!(ip.abs() < 1e-12);
        let nrm = (gram * &ker[0]).dot(&ker[0]);
        assert!((nrm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simdiag_two_commuting() {
        // Diagonal matrices in a rotated basis.
        let d1 = cm(2, 2, &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]);
        let d2 = cm(2, 2, &[(3.0, 0.0), (0.0, 0.0), (0.0, 0.0), (3.0, 0.0)]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q = cm(2, 2, &[(s, 0.0), (s, 0.0), (-s, 0.0), (s, 0.0)]);
        let m1 = &q * d1 * q.adjoint();
        let m2 = &q * d2 * q.adjoint();
        let (u, w) = simultaneous_eigenbasis(&[m1.clone(), m2.clone()], 1e-7).unwrap();
        for (j, wj) in w.iter().enumerate() {
            let col = u.column(j).into_owned();
            let r1 = (&m1 * &col - &col * Cf::new(wj[0], 0.0)).norm();
            let r2 = (&m2 * &col - &col * Cf::new(wj[1], 0.0)).norm();
            assert!(r1 < 1e-10 && r2 < 1e-10);
        }
    }

    #[test]
    fn weight_grouping() {
        let w1 = RVector::from_vec(vec![1.0, 0.0]);
        let w2 = RVector::from_vec(vec![1.0 + 1e-12, 0.0]);
        let w3 = RVector::from_vec(vec![0.0, 1.0]);
        let groups = group_by_weight(&[w1, w2, w3], 1e-7);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].1.len(), 2);
    }
}
