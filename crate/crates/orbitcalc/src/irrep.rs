//! Construction of irreducible unitary representations with a prescribed
//! dominant integral highest weight.
//!
//! The route: form tensor powers of the defining representation and its
//! conjugate until the target weight appears, solve for a vector of that
//! weight killed by the simple raising operators, generate the cyclic
//! invariant subspace with the simple lowering operators, and compress.
//! Only weights in the lattice generated by the defining representation's
//! weights are constructible this way: for su(n) that is every dominant
//! integral weight, for so(n) the tensor (non-spin) weights.

use std::collections::HashSet;

use crate::algebra::{ComplexElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, Cf, RVector};
use crate::roots::{CartanSubalgebra, RootDatum};
use crate::tol::{Tol, CYCLIC_STOP_TOL, PHASE_COORD_TOL, WEIGHT_CLUSTER_TOL};

/// Dominant integral weight given by its labels `n_i = i l(H_{a_i})`
/// over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    pub dynkin_labels: Vec<i64>,
}

impl HighestWeight {
    pub fn new(dynkin_labels: Vec<i64>) -> Result<Self> {
        if dynkin_labels.iter().any(|&n| n < 0) {
            return Err(Error::InvalidAlgebra(format!(
                "dominant integral labels must be nonnegative, got {dynkin_labels:?}"
            )));
        }
        Ok(HighestWeight { dynkin_labels })
    }

    pub fn rank(&self) -> usize {
        self.dynkin_labels.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.dynkin_labels.iter().all(|&n| n == 0)
    }
}

impl std::fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.dynkin_labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// A unitary representation of the algebra: one skew-adjoint matrix per
/// basis element, extended C-linearly to the complexification.
#[derive(Debug, Clone)]
pub struct Rep {
    pub matrices: Vec<CMatrix>,
}

impl Rep {
    pub fn defining(algebra: &LieAlgebra) -> Rep {
        Rep {
            matrices: algebra.defining_rep.clone(),
        }
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(dim_algebra: usize) -> Rep {
        Rep {
            matrices: vec![CMatrix::zeros(1, 1); dim_algebra],
        }
    }

    /// Dimension of the representation space.
    pub fn dim_space(&self) -> usize {
        self.matrices.first().map(|m| m.nrows()).unwrap_or(0)
    }

    pub fn dim_algebra(&self) -> usize {
        self.matrices.len()
    }

    /// Matrix of a complexified element.
    pub fn of_element(&self, w: &ComplexElement) -> CMatrix {
        let n = self.dim_space();
        let mut m = CMatrix::zeros(n, n);
        for (k, mat) in self.matrices.iter().enumerate() {
            if w.coeffs[k] != Cf::new(0.0, 0.0) {
                m += mat * w.coeffs[k];
            }
        }
        m
    }
}

/// Tensor product: `pi(X) = pi1(X) (x) I + I (x) pi2(X)`.
pub fn tensor_product(r1: &Rep, r2: &Rep) -> Result<Rep> {
    if r1.dim_algebra() != r2.dim_algebra() {
        return Err(Error::DimensionMismatch {
            expected: r1.dim_algebra(),
            got: r2.dim_algebra(),
        });
    }
    let n1 = r1.dim_space();
    let n2 = r2.dim_space();
    let i1 = CMatrix::identity(n1, n1);
    let i2 = CMatrix::identity(n2, n2);
    let matrices = r1
        .matrices
        .iter()
        .zip(&r2.matrices)
        .map(|(a, b)| a.kronecker(&i2) + i1.kronecker(b))
        .collect();
    Ok(Rep { matrices })
}

/// Entrywise conjugate representation; for skew-adjoint generators this is
/// again a representation, with all weights negated.
pub fn conjugate_rep(r: &Rep) -> Rep {
    Rep {
        matrices: r.matrices.iter().map(|m| m.map(|c| c.conj())).collect(),
    }
}

/// A weight space: the weight in Cartan coordinates and an orthonormal
/// basis of its eigenspace.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub coords: RVector,
    pub basis: Vec<CVector>,
}

impl WeightSpace {
    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

/// Orthogonal weight-space decomposition of a representation with respect
/// to a Cartan subalgebra, by simultaneous diagonalization of the
/// commuting self-adjoint family `-i pi(h_j)`.
pub fn weight_decomposition(rep: &Rep, cartan: &CartanSubalgebra) -> Result<Vec<WeightSpace>> {
    let mats: Vec<CMatrix> = cartan
        .basis
        .iter()
        .map(|h| rep.of_element(&ComplexElement::from_real(h)) * Cf::new(0.0, -1.0))
        .collect();
    let (u, col_weights) = linalg::simultaneous_eigenbasis(&mats, WEIGHT_CLUSTER_TOL)?;
    let groups = linalg::group_by_weight(&col_weights, WEIGHT_CLUSTER_TOL);
    Ok(groups
        .into_iter()
        .map(|(coords, idxs)| WeightSpace {
            coords,
            basis: idxs.iter().map(|&j| u.column(j).into_owned()).collect(),
        })
        .collect())
}

/// An irreducible unitary representation with marked highest weight data.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub rep: Rep,
    pub highest_weight: HighestWeight,
    /// Unit highest weight vector, annihilated by every raising operator.
    pub highest_vector: CVector,
    pub weights: Vec<WeightSpace>,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.rep.dim_space()
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.rep.matrices
    }

    pub fn of_element(&self, w: &ComplexElement) -> CMatrix {
        self.rep.of_element(w)
    }
}

/// Integer labels of every weight of a representation, with multiplicity.
fn integer_weight_labels(
    rep: &Rep,
    rd: &RootDatum,
) -> Result<Vec<(Vec<i64>, WeightSpace)>> {
    let spaces = weight_decomposition(rep, &rd.cartan)?;
    let mut out = Vec::with_capacity(spaces.len());
    for ws in spaces {
        let labels = rd.weight_labels(&ws.coords);
        let mut li = Vec::with_capacity(labels.len());
        for v in &labels {
            let r = v.round();
            if (v - r).abs() > 1e-6 {
                return Err(Error::ConstructionFailed(format!(
                    "weight label {v} is not an integer"
                )));
            }
            li.push(r as i64);
        }
        out.push((li, ws));
    }
    Ok(out)
}

/// Is `target` in the integer span of `gens`? Column echelon form over Z.
fn in_integer_span(gens: &[Vec<i64>], target: &[i64]) -> bool {
    let r = target.len();
    let mut cols: Vec<Vec<i64>> = gens.to_vec();
    let mut pivots: Vec<(usize, Vec<i64>)> = Vec::new(); // (row, column)
    for row in 0..r {
        // Reduce active columns until at most one has a nonzero entry here.
        loop {
            let mut nz: Vec<usize> = (0..cols.len()).filter(|&j| cols[j][row] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| cols[j][row].abs());
            let (small, rest) = (nz[0], &nz[1..]);
            let small_col = cols[small].clone();
            for &j in rest {
                let q = cols[j][row] / small_col[row];
                for (v, s) in cols[j].iter_mut().zip(&small_col) {
                    *v -= q * s;
                }
            }
        }
        if let Some(j) = (0..cols.len()).find(|&j| cols[j][row] != 0) {
            pivots.push((row, cols.remove(j)));
        }
    }
    // Forward substitution against the echelon columns.
    let mut res: Vec<i64> = target.to_vec();
    for (row, col) in &pivots {
        if res[*row] % col[*row] != 0 {
            return false;
        }
        let q = res[*row] / col[*row];
        for i in 0..r {
            res[i] -= q * col[i];
        }
    }
    res.iter().all(|&x| x == 0)
}

/// Minkowski sums of weight-label multisets for `a` defining and `b`
/// conjugate factors.
fn tensor_weight_sets(
    def_labels: &[Vec<i64>],
    max_total: usize,
) -> Vec<Vec<HashSet<Vec<i64>>>> {
    let r = def_labels.first().map(|l| l.len()).unwrap_or(0);
    let conj_labels: Vec<Vec<i64>> = def_labels
        .iter()
        .map(|l| l.iter().map(|&x| -x).collect())
        .collect();
    let add_set = |s: &HashSet<Vec<i64>>, gens: &[Vec<i64>]| -> HashSet<Vec<i64>> {
        let mut out = HashSet::new();
        for v in s {
            for g in gens {
                out.insert(v.iter().zip(g).map(|(a, b)| a + b).collect());
            }
        }
        out
    };
    let mut grid: Vec<Vec<HashSet<Vec<i64>>>> = Vec::new();
    for a in 0..=max_total {
        let mut row = Vec::new();
        for b in 0..=(max_total - a) {
            let set = if a == 0 && b == 0 {
                let mut s = HashSet::new();
                s.insert(vec![0i64; r]);
                s
            } else if a > 0 {
                add_set(&grid[a - 1][b], def_labels)
            } else {
                add_set(&row[b - 1], &conj_labels)
            };
            row.push(set);
        }
        grid.push(row);
    }
    grid
}

/// Build the irreducible representation with the given highest weight.
///
/// Tensor pairs `(a, b)` are searched in order of total degree, preferring
/// more defining factors; the first pair whose weight set contains the
/// target and which admits a highest weight vector wins. Weights outside
/// the integer lattice of the defining weights are rejected up front.
pub fn build_irrep(
    algebra: &LieAlgebra,
    rd: &RootDatum,
    weight: &HighestWeight,
) -> Result<Irrep> {
    let tol = Tol::global();
    let rank = rd.rank();
    if weight.rank() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            got: weight.rank(),
        });
    }

    let defining = Rep::defining(algebra);
    let def_weights = integer_weight_labels(&defining, rd)?;
    let mut def_labels: Vec<Vec<i64>> = Vec::new();
    for (labels, ws) in &def_weights {
        for _ in 0..ws.multiplicity() {
            def_labels.push(labels.clone());
        }
    }

    if !in_integer_span(&def_labels, &weight.dynkin_labels) {
        return Err(Error::UnreachableWeight {
            labels: weight.dynkin_labels.clone(),
            reason: format!(
                "the weight is not in the integer lattice generated by the defining \
                 representation's weights of {} (e.g. spin weights of so(n) cannot be \
                 reached from the vector representation)",
                algebra.label
            ),
        });
    }

    let total_labels: i64 = weight.dynkin_labels.iter().sum();
    let max_total = (2 + total_labels as usize * rank).clamp(4, 16);
    let grid = tensor_weight_sets(&def_labels, max_total);

    let simple_positions = rd.simple_positions();
    for total in 0..=max_total {
        for a in (0..=total).rev() {
            let b = total - a;
            if !grid[a][b].contains(&weight.dynkin_labels) {
                continue;
            }
            let mut t_rep = Rep::trivial(algebra.dim);
            for _ in 0..a {
                t_rep = tensor_product(&t_rep, &defining)?;
            }
            let conj = conjugate_rep(&defining);
            for _ in 0..b {
                t_rep = tensor_product(&t_rep, &conj)?;
            }
            if let Some(irrep) =
                extract_irrep(algebra, rd, weight, &t_rep, &simple_positions, tol)?
            {
                return Ok(irrep);
            }
        }
    }
    Err(Error::NoHighestWeightVector(format!(
        "weight {weight} lies in the defining weight lattice but no highest weight vector \
         was found in tensor products up to total degree {max_total}"
    )))
}

/// Locate a highest weight vector of the target weight inside `t_rep`,
/// generate its cyclic hull under the simple lowering operators, and
/// compress. Returns `Ok(None)` when the weight space exists but carries
/// no highest weight vector (the search then moves on).
fn extract_irrep(
    algebra: &LieAlgebra,
    rd: &RootDatum,
    weight: &HighestWeight,
    t_rep: &Rep,
    simple_positions: &[usize],
    tol: Tol,
) -> Result<Option<Irrep>> {
    let n_t = t_rep.dim_space();
    let spaces = integer_weight_labels(t_rep, rd)?;
    let target = spaces
        .iter()
        .find(|(labels, _)| labels == &weight.dynkin_labels);
    let Some((_, target_space)) = target else {
        return Ok(None);
    };

    let m = target_space.multiplicity();
    let mut v = CMatrix::zeros(n_t, m);
    for (j, b) in target_space.basis.iter().enumerate() {
        v.set_column(j, b);
    }

    let raisers: Vec<CMatrix> = simple_positions
        .iter()
        .map(|&p| t_rep.of_element(&rd.triple(p).e))
        .collect();
    let mut stacked = CMatrix::zeros(raisers.len() * n_t, m);
    for (s, e) in raisers.iter().enumerate() {
        stacked.view_mut((s * n_t, 0), (n_t, m)).copy_from(&(e * &v));
    }
    let kernel = linalg::complex_kernel(&stacked, tol);
    let Some(coeffs) = kernel.first() else {
        return Ok(None);
    };
    let xi_raw = &v * coeffs;
    let xi = phase_fix_vector(&(&xi_raw / Cf::new(xi_raw.norm(), 0.0)));

    // Cyclic hull under the simple lowering operators, sweeping until a
    // full pass adds nothing beyond the current span.
    let lowerers: Vec<CMatrix> = simple_positions
        .iter()
        .map(|&p| t_rep.of_element(&rd.triple(p).f))
        .collect();
    let mut basis: Vec<CVector> = vec![xi.clone()];
    loop {
        let mut added = false;
        let snapshot_len = basis.len();
        for i in 0..snapshot_len {
            for low in &lowerers {
                let mut w = low * &basis[i];
                for _ in 0..2 {
                    for b in &basis {
                        let c = b.dotc(&w);
                        w -= b * c;
                    }
                }
                if w.norm() > CYCLIC_STOP_TOL {
                    let nw = w.norm();
                    basis.push(w / Cf::new(nw, 0.0));
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    let d = basis.len();
    let mut q = CMatrix::zeros(n_t, d);
    for (j, b) in basis.iter().enumerate() {
        q.set_column(j, b);
    }

    let compressed: Vec<CMatrix> = t_rep
        .matrices
        .iter()
        .map(|mat| q.adjoint() * mat * &q)
        .collect();
    let rep = Rep {
        matrices: compressed,
    };

    // Invariance / homomorphism certificate on the compressed matrices.
    let mut homo = 0.0_f64;
    for i in 0..algebra.dim {
        for j in (i + 1)..algebra.dim {
            let comm = &rep.matrices[i] * &rep.matrices[j] - &rep.matrices[j] * &rep.matrices[i];
            let mut expected = CMatrix::zeros(d, d);
            for k in 0..algebra.dim {
                let c = algebra.c(i, j, k);
                if c != 0.0 {
                    expected += &rep.matrices[k] * Cf::new(c, 0.0);
                }
            }
            homo = homo.max(linalg::opnorm(&(comm - expected)));
        }
    }
    if homo > 1e-8 {
        return Err(Error::ConstructionFailed(format!(
            "cyclic hull is not invariant: homomorphism residual {homo:.3e}"
        )));
    }

    // The full annihilator of the simple raising operators must be one
    // dimensional: irreducibility is verified, not assumed.
    let mut ann = CMatrix::zeros(simple_positions.len() * d, d);
    for (s, &p) in simple_positions.iter().enumerate() {
        ann.view_mut((s * d, 0), (d, d))
            .copy_from(&rep.of_element(&rd.triple(p).e));
    }
    let ann_dim = if simple_positions.is_empty() {
        d
    } else {
        linalg::complex_kernel(&ann, tol).len()
    };
    if ann_dim != 1 {
        return Err(Error::ConstructionFailed(format!(
            "compressed module has a {ann_dim}-dimensional highest weight annihilator"
        )));
    }

    let highest_vector = q.adjoint() * &xi;

    // The raising operators for every positive root must kill the vector.
    for p in 0..rd.positives.len() {
        let res = (rep.of_element(&rd.triple(p).e) * &highest_vector).norm();
        if res > tol.residual * 10.0 {
            return Err(Error::ConstructionFailed(format!(
                "highest vector is not annihilated by a positive raising operator \
                 (residual {res:.3e})"
            )));
        }
    }

    // Read the weight of the constructed vector back off the matrices and
    // compare labels exactly.
    let mut coords = RVector::zeros(rd.rank());
    for (j, h) in rd.cartan.basis.iter().enumerate() {
        let act = rep.of_element(&ComplexElement::from_real(h)) * &highest_vector;
        let val = highest_vector.dotc(&act) * Cf::new(0.0, -1.0);
        coords[j] = val.re;
    }
    let labels = rd.weight_labels(&coords);
    for (v, &expect) in labels.iter().zip(&weight.dynkin_labels) {
        if (v - expect as f64).abs() > 1e-6 {
            return Err(Error::ConstructionFailed(format!(
                "constructed highest weight has labels {labels:?}, expected {:?}",
                weight.dynkin_labels
            )));
        }
    }

    let weights = weight_decomposition(&rep, &rd.cartan)?;
    Ok(Some(Irrep {
        rep,
        highest_weight: weight.clone(),
        highest_vector,
        weights,
    }))
}

fn phase_fix_vector(v: &CVector) -> CVector {
    for i in 0..v.len() {
        if v[i].norm() > PHASE_COORD_TOL {
            let ph = v[i] / Cf::new(v[i].norm(), 0.0);
            return v * ph.conj();
        }
    }
    v.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{compute_roots, find_cartan};

    fn setup(name: &str) -> (LieAlgebra, RootDatum) {
        let a = LieAlgebra::by_name(name).unwrap();
        let h = find_cartan(&a, None).unwrap();
        let rd = compute_roots(&a, &h).unwrap();
        (a, rd)
    }

    fn hw(labels: &[i64]) -> HighestWeight {
        HighestWeight::new(labels.to_vec()).unwrap()
    }

    #[test]
    fn tensor_square_of_su2_defining() {
        let (a, rd) = setup("su2");
        let d = Rep::defining(&a);
        let t = tensor_product(&d, &d).unwrap();
        assert_eq!(t.dim_space(), 4);
        // Weights {2, 0, 0, -2} in coroot labels.
        let mut labels: Vec<i64> = integer_weight_labels(&t, &rd)
            .unwrap()
            .into_iter()
            .flat_map(|(l, ws)| std::iter::repeat_n(l[0], ws.multiplicity()))
            .collect();
        labels.sort();
        assert_eq!(labels, vec![-2, 0, 0, 2]);
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let (a, _) = setup("su2");
        let d = Rep::defining(&a);
        let t = tensor_product(&d, &Rep::trivial(a.dim)).unwrap();
        for (m1, m2) in t.matrices.iter().zip(&d.matrices) {
            assert!(linalg::opnorm(&(m1 - m2)) < 1e-15);
        }
    }

    #[test]
    fn su3_def_times_conj_has_zero_weight_thrice() {
        let (a, rd) = setup("su3");
        let d = Rep::defining(&a);
        let t = tensor_product(&d, &conjugate_rep(&d)).unwrap();
        let spaces = integer_weight_labels(&t, &rd).unwrap();
        let zero = spaces
            .iter()
            .find(|(l, _)| l.iter().all(|&x| x == 0))
            .unwrap();
        assert_eq!(zero.1.multiplicity(), 3);
    }

    #[test]
    fn conjugate_negates_weights() {
        let (a, rd) = setup("su2");
        let d = Rep::defining(&a);
        let mut w: Vec<i64> = integer_weight_labels(&d, &rd)
            .unwrap()
            .iter()
            .map(|(l, _)| l[0])
            .collect();
        let mut wc: Vec<i64> = integer_weight_labels(&conjugate_rep(&d), &rd)
            .unwrap()
            .iter()
            .map(|(l, _)| l[0])
            .collect();
        w.sort();
        wc.sort();
        assert_eq!(w, wc); // self-conjugate: {-1, 1} both ways
    }

    #[test]
    fn su3_conjugate_defining_is_other_fundamental() {
        let (a, rd) = setup("su3");
        let d = Rep::defining(&a);
        let mut labels: Vec<Vec<i64>> = integer_weight_labels(&conjugate_rep(&d), &rd)
            .unwrap()
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        labels.sort();
        let mut expected = vec![vec![0, 1], vec![1, -1], vec![-1, 0]];
        expected.sort();
        assert_eq!(labels, expected);
    }

    #[test]
    fn trivial_weight_gives_one_dimensional_rep() {
        let (a, rd) = setup("su2");
        let irrep = build_irrep(&a, &rd, &hw(&[0])).unwrap();
        assert_eq!(irrep.dim(), 1);
        for m in irrep.matrices() {
            assert!(linalg::opnorm(m) < 1e-12);
        }
        assert_eq!(irrep.weights.len(), 1);
        assert!(irrep.weights[0].coords.amax() < 1e-9);
    }

    #[test]
    fn su2_adjoint_from_labels() {
        let (a, rd) = setup("su2");
        let irrep = build_irrep(&a, &rd, &hw(&[2])).unwrap();
        assert_eq!(irrep.dim(), 3);
        let mut labels: Vec<i64> = irrep
            .weights
            .iter()
            .map(|ws| rd.weight_labels(&ws.coords)[0].round() as i64)
            .collect();
        labels.sort();
        assert_eq!(labels, vec![-2, 0, 2]);
        for ws in &irrep.weights {
            assert_eq!(ws.multiplicity(), 1);
        }
    }

    #[test]
    fn su2_spins_dimensions() {
        let (a, rd) = setup("su2");
        for n in 1..=5i64 {
            let irrep = build_irrep(&a, &rd, &hw(&[n])).unwrap();
            assert_eq!(irrep.dim(), (n + 1) as usize, "label {n}");
        }
    }

    #[test]
    fn su3_adjoint_dimension_and_multiplicity() {
        let (a, rd) = setup("su3");
        let irrep = build_irrep(&a, &rd, &hw(&[1, 1])).unwrap();
        assert_eq!(irrep.dim(), 8);
        let zero = irrep
            .weights
            .iter()
            .find(|ws| ws.coords.amax() < 1e-7)
            .unwrap();
        assert_eq!(zero.multiplicity(), 2);
    }

    #[test]
    fn unitarity_and_highest_vector_annihilation() {
        let (a, rd) = setup("su3");
        let irrep = build_irrep(&a, &rd, &hw(&[2, 0])).unwrap();
        assert_eq!(irrep.dim(), 6);
        for m in irrep.matrices() {
            assert!(linalg::opnorm(&(m + m.adjoint())) < 1e-9);
        }
        for p in 0..rd.positives.len() {
            let e = irrep.of_element(&rd.triple(p).e);
            assert!((e * &irrep.highest_vector).norm() < 1e-9);
        }
    }

    #[test]
    fn sl2_integrality_of_weights() {
        let (a, rd) = setup("su3");
        let irrep = build_irrep(&a, &rd, &hw(&[1, 1])).unwrap();
        for ws in &irrep.weights {
            for p in 0..rd.positives.len() {
                let v = rd.dynkin_pairing(p, &ws.coords);
                assert!((v - v.round()).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn spin_weight_of_so5_unreachable() {
        let (a, rd) = setup("so5");
        let err = build_irrep(&a, &rd, &hw(&[0, 1])).unwrap_err();
        match err {
            Error::UnreachableWeight { labels, reason } => {
                assert_eq!(labels, vec![0, 1]);
                assert!(reason.contains("lattice"));
            }
            other => panic!("expected UnreachableWeight, got {other:?}"),
        }
    }

    #[test]
    fn so5_vector_weight_reachable() {
        let (a, rd) = setup("so5");
        let irrep = build_irrep(&a, &rd, &hw(&[1, 0])).unwrap();
        assert_eq!(irrep.dim(), 5);
    }

    #[test]
    fn direct_sum_factor_rep() {
        // ([1],[0]) acts through the first factor only; the second factor
        // is represented by zero.
        let (a, rd) = setup("su2+su2");
        let irrep = build_irrep(&a, &rd, &hw(&[1, 0])).unwrap();
        assert_eq!(irrep.dim(), 2);
        let mut nonzero_first = 0.0_f64;
        let mut max_second = 0.0_f64;
        for k in 0..3 {
            nonzero_first = nonzero_first.max(linalg::opnorm(&irrep.matrices()[k]));
            max_second = max_second.max(linalg::opnorm(&irrep.matrices()[k + 3]));
        }
        assert!(nonzero_first > 0.4);
        assert!(max_second < 1e-10);
    }

    #[test]
    fn weight_rank_mismatch_rejected() {
        let (a, rd) = setup("su3");
        assert!(build_irrep(&a, &rd, &hw(&[1])).is_err());
    }

    #[test]
    fn negative_labels_rejected() {
        assert!(HighestWeight::new(vec![1, -1]).is_err());
    }
}
