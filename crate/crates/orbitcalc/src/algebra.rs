//! Real compact semisimple Lie algebras and their complexifications.
//!
//! An algebra is stored as structure constants over a fixed real basis
//! `X_1, ..., X_n` (so `[X_i, X_j] = sum_k c[i][j][k] X_k`) together with a
//! faithful defining representation by skew-adjoint complex matrices.
//!
//! Conventions used throughout the crate:
//!
//! * the real form is the R-span of the declared basis, so the conjugation
//!   `theta` is coordinatewise complex conjugation and is exact;
//! * the involution is `(X + iY)^* = -X + iY` for real `X, Y`, i.e.
//!   `star(w) = -conj(w)` on coefficient vectors, chosen so that
//!   `(pi_W)^* = pi_{W^*}` for every unitary representation `pi`;
//! * `Kil` denotes the NEGATIVE of the Killing form,
//!   `Kil(X_i, X_j) = -tr(ad_i ad_j)`, which is positive definite on a
//!   compact semisimple algebra, and is extended C-bilinearly (not
//!   sesquilinearly) to the complexification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, Cf, RMatrix, RVector};
use crate::tol::Tol;

/// A real compact semisimple Lie algebra with a faithful matrix realization.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub label: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// Flattened rank-3 array, index `i*dim*dim + j*dim + k`.
    structure_constants: Vec<f64>,
    /// Skew-adjoint complex matrices realizing the basis.
    pub defining_rep: Vec<CMatrix>,
    /// Basis indices of the preferred Cartan subalgebra, set by builders.
    pub(crate) standard_cartan: Option<Vec<usize>>,
}

/// Element `W = sum_i w_i X_i` of the complexification.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexElement {
    pub coeffs: CVector,
}

impl ComplexElement {
    pub fn new(coeffs: CVector) -> Self {
        ComplexElement { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        ComplexElement {
            coeffs: CVector::zeros(dim),
        }
    }

    pub fn from_real(v: &RVector) -> Self {
        ComplexElement {
            coeffs: linalg::vec_to_complex(v),
        }
    }

    /// Coefficient vector of the `i`-th basis element.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut c = CVector::zeros(dim);
        c[i] = Cf::new(1.0, 0.0);
        ComplexElement { coeffs: c }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// The conjugation `theta` fixing the real form: coordinatewise
    /// complex conjugation in the declared basis.
    pub fn theta(&self) -> Self {
        ComplexElement {
            coeffs: self.coeffs.map(|c| c.conj()),
        }
    }

    /// The involution `(X + iY)^* = -X + iY`, i.e. `w -> -conj(w)`.
    /// Antilinear; its fixed points are `i * g`.
    pub fn star(&self) -> Self {
        ComplexElement {
            coeffs: self.coeffs.map(|c| -c.conj()),
        }
    }

    /// Whether the element lies in the real form (theta-fixed).
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.im.abs() <= tol)
    }

    /// Real part vector (valid projection only when `is_real`).
    pub fn real_coeffs(&self) -> RVector {
        self.coeffs.map(|c| c.re)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    pub fn scale(&self, s: Cf) -> Self {
        ComplexElement {
            coeffs: &self.coeffs * s,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexElement {
            coeffs: &self.coeffs + &other.coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexElement {
            coeffs: &self.coeffs - &other.coeffs,
        }
    }
}

/// The negative of the Killing form as a Gram matrix over the basis.
#[derive(Debug, Clone)]
pub struct KillingForm {
    pub gram: RMatrix,
}

impl KillingForm {
    pub fn of(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim;
        let ads: Vec<RMatrix> = (0..n).map(|i| algebra.ad_basis(i)).collect();
        let mut gram = RMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = -(&ads[i] * &ads[j]).trace();
                gram[(i, j)] = v;
                gram[(j, i)] = v;
            }
        }
        KillingForm { gram }
    }

    /// C-bilinear extension to the complexification.
    pub fn eval(&self, w: &ComplexElement, z: &ComplexElement) -> Result<Cf> {
        let n = self.gram.nrows();
        if w.dim() != n || z.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.dim().max(z.dim()),
            });
        }
        let gz = linalg::to_complex(&self.gram) * &z.coeffs;
        // bilinear, NOT sesquilinear: transpose, no conjugation
        Ok(w.coeffs.dot(&gz))
    }

    pub fn eval_real(&self, x: &RVector, y: &RVector) -> f64 {
        (&self.gram * y).dot(x)
    }
}

/// Serialized algebra specification.
///
/// `structure_constants` is a sparse triplet list `[i, j, k, value]` and
/// `defining_rep` stores each matrix as a flat row-major list of
/// `[re, im]` pairs. Unknown fields are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub label: String,
    pub dim: usize,
    pub structure_constants: Vec<(usize, usize, usize, f64)>,
    pub defining_rep: Vec<Vec<[f64; 2]>>,
}

impl LieAlgebra {
    /// Assemble an algebra from raw parts. Shapes are validated here;
    /// the mathematical invariants are the business of [`check_algebra`].
    pub fn from_parts(
        label: impl Into<String>,
        basis_labels: Vec<String>,
        structure_constants: Vec<f64>,
        defining_rep: Vec<CMatrix>,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        if structure_constants.len() != dim * dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "structure constant array has {} entries, expected {}",
                structure_constants.len(),
                dim * dim * dim
            )));
        }
        if defining_rep.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "defining rep has {} matrices, expected {}",
                defining_rep.len(),
                dim
            )));
        }
        let nrep = defining_rep.first().map(|m| m.nrows()).unwrap_or(0);
        if nrep == 0 {
            return Err(Error::InvalidAlgebra("empty defining rep".into()));
        }
        for m in &defining_rep {
            if m.nrows() != nrep || m.ncols() != nrep {
                return Err(Error::InvalidAlgebra(
                    "defining rep matrices must be square and of equal size".into(),
                ));
            }
        }
        Ok(LieAlgebra {
            label: label.into(),
            dim,
            basis_labels,
            structure_constants,
            defining_rep,
            standard_cartan: None,
        })
    }

    /// Built-in algebra by name: `su2`..`su6`, `so3`..`so6`, and `+`-joined
    /// direct sums such as `su2+su2`.
    pub fn by_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if let Some((first, rest)) = name.split_once('+') {
            let a = Self::by_name(first)?;
            let b = Self::by_name(rest)?;
            return Ok(Self::direct_sum(&a, &b));
        }
        if let Some(n) = name.strip_prefix("su") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidAlgebra(format!("bad algebra name {name:?}")))?;
            return Self::su(n);
        }
        if let Some(n) = name.strip_prefix("so") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidAlgebra(format!("bad algebra name {name:?}")))?;
            return Self::so(n);
        }
        Err(Error::InvalidAlgebra(format!(
            "unknown algebra name {name:?} (expected suN, soN, or sums like su2+su2)"
        )))
    }

    /// su(n), 2 <= n <= 6, in the defining representation.
    ///
    /// Basis order: for each pair `i < j` the matrices
    /// `(i/2)(E_ij + E_ji)` and `(1/2)(E_ij - E_ji)`, then the diagonal
    /// generators `(i/2)(E_kk - E_{k+1,k+1})`. For su(2) this is exactly
    /// `(i/2) sigma_1, (i/2) sigma_2, (i/2) sigma_3`.
    pub fn su(n: usize) -> Result<Self> {
        if !(2..=6).contains(&n) {
            return Err(Error::InvalidAlgebra(format!(
                "su({n}) is outside the built-in range 2..=6"
            )));
        }
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let half_i = Cf::new(0.0, 0.5);
        let half = Cf::new(0.5, 0.0);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut a = CMatrix::zeros(n, n);
                a[(i, j)] = half_i;
                a[(j, i)] = half_i;
                mats.push(a);
                labels.push(format!("x{}{}", i + 1, j + 1));
                let mut b = CMatrix::zeros(n, n);
                b[(i, j)] = half;
                b[(j, i)] = -half;
                mats.push(b);
                labels.push(format!("y{}{}", i + 1, j + 1));
            }
        }
        let off_diag = mats.len();
        for k in 0..(n - 1) {
            let mut d = CMatrix::zeros(n, n);
            d[(k, k)] = half_i;
            d[(k + 1, k + 1)] = -half_i;
            mats.push(d);
            labels.push(format!("h{}", k + 1));
        }
        let cartan = (off_diag..mats.len()).collect();
        let mut alg = Self::from_defining_rep(format!("su{n}"), labels, mats)?;
        alg.standard_cartan = Some(cartan);
        Ok(alg)
    }

    /// so(n), 3 <= n <= 6, in the vector representation. Basis
    /// `L_ij = E_ij - E_ji` for `i < j`; the standard Cartan is spanned by
    /// the disjoint plane rotations `L_12, L_34, ...`.
    pub fn so(n: usize) -> Result<Self> {
        if !(3..=6).contains(&n) {
            return Err(Error::InvalidAlgebra(format!(
                "so({n}) is outside the built-in range 3..=6 (so(2) is not semisimple)"
            )));
        }
        let one = Cf::new(1.0, 0.0);
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let mut cartan = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if j == i + 1 && i % 2 == 0 {
                    cartan.push(mats.len());
                }
                let mut l = CMatrix::zeros(n, n);
                l[(i, j)] = one;
                l[(j, i)] = -one;
                mats.push(l);
                labels.push(format!("L{}{}", i + 1, j + 1));
            }
        }
        let mut alg = Self::from_defining_rep(format!("so{n}"), labels, mats)?;
        alg.standard_cartan = Some(cartan);
        Ok(alg)
    }

    /// Block-diagonal direct sum. The summands bracket to zero against each
    /// other and the defining representation acts block-diagonally, so it
    /// stays faithful.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let dim = a.dim + b.dim;
        let na = a.defining_rep[0].nrows();
        let nb = b.defining_rep[0].nrows();
        let mut sc = vec![0.0; dim * dim * dim];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    sc[(i * dim + j) * dim + k] = a.c(i, j, k);
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    sc[((i + a.dim) * dim + (j + a.dim)) * dim + (k + a.dim)] = b.c(i, j, k);
                }
            }
        }
        let mut rep = Vec::with_capacity(dim);
        for m in &a.defining_rep {
            let mut block = CMatrix::zeros(na + nb, na + nb);
            block.view_mut((0, 0), (na, na)).copy_from(m);
            rep.push(block);
        }
        for m in &b.defining_rep {
            let mut block = CMatrix::zeros(na + nb, na + nb);
            block.view_mut((na, na), (nb, nb)).copy_from(m);
            rep.push(block);
        }
        let mut labels: Vec<String> = a.basis_labels.iter().map(|l| format!("a.{l}")).collect();
        labels.extend(b.basis_labels.iter().map(|l| format!("b.{l}")));
        let standard_cartan = match (&a.standard_cartan, &b.standard_cartan) {
            (Some(ca), Some(cb)) => {
                let mut c = ca.clone();
                c.extend(cb.iter().map(|i| i + a.dim));
                Some(c)
            }
            _ => None,
        };
        LieAlgebra {
            label: format!("{}+{}", a.label, b.label),
            dim,
            basis_labels: labels,
            structure_constants: sc,
            defining_rep: rep,
            standard_cartan,
        }
    }

    /// Derive structure constants from a list of skew-adjoint matrices that
    /// are known to close under commutators.
    fn from_defining_rep(
        label: String,
        basis_labels: Vec<String>,
        mats: Vec<CMatrix>,
    ) -> Result<Self> {
        let dim = mats.len();
        let nrep = mats[0].nrows();
        // Real least-squares system: columns are [Re(vec pi_k); Im(vec pi_k)].
        let mut basis_mat = RMatrix::zeros(2 * nrep * nrep, dim);
        for (k, m) in mats.iter().enumerate() {
            for (idx, c) in m.iter().enumerate() {
                basis_mat[(idx, k)] = c.re;
                basis_mat[(nrep * nrep + idx, k)] = c.im;
            }
        }
        let svd = basis_mat.clone().svd(true, true);
        let mut sc = vec![0.0; dim * dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let comm = &mats[i] * &mats[j] - &mats[j] * &mats[i];
                let mut rhs = RVector::zeros(2 * nrep * nrep);
                for (idx, c) in comm.iter().enumerate() {
                    rhs[idx] = c.re;
                    rhs[nrep * nrep + idx] = c.im;
                }
                let coeffs = svd
                    .solve(&rhs, 1e-13)
                    .map_err(|e| Error::InvalidAlgebra(format!("structure solve failed: {e}")))?;
                let res = (&basis_mat * &coeffs - &rhs).norm();
                if res > 1e-9 {
                    return Err(Error::InvalidAlgebra(format!(
                        "matrices do not close under commutators (residual {res:.3e})"
                    )));
                }
                for k in 0..dim {
                    sc[(i * dim + j) * dim + k] = coeffs[k];
                    sc[(j * dim + i) * dim + k] = -coeffs[k];
                }
            }
        }
        Self::from_parts(label, basis_labels, sc, mats)
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let dim = spec.dim;
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dim must be positive".into()));
        }
        let mut sc = vec![0.0; dim * dim * dim];
        let mut seen = vec![false; dim * dim * dim];
        for &(i, j, k, v) in &spec.structure_constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure constant index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            let idx = (i * dim + j) * dim + k;
            if seen[idx] {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate structure constant entry ({i},{j},{k})"
                )));
            }
            seen[idx] = true;
            sc[idx] = v;
        }
        if spec.defining_rep.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "defining_rep has {} matrices, expected {dim}",
                spec.defining_rep.len()
            )));
        }
        let n2 = spec.defining_rep[0].len();
        let nrep = (n2 as f64).sqrt().round() as usize;
        if nrep * nrep != n2 || nrep == 0 {
            return Err(Error::InvalidAlgebra(format!(
                "defining_rep matrices must be square; got {n2} entries"
            )));
        }
        let mut rep = Vec::with_capacity(dim);
        for flat in &spec.defining_rep {
            if flat.len() != n2 {
                return Err(Error::InvalidAlgebra(
                    "defining_rep matrices must all have the same size".into(),
                ));
            }
            // row-major [re, im] pairs
            let m = CMatrix::from_fn(nrep, nrep, |r, c| {
                let [re, im] = flat[r * nrep + c];
                Cf::new(re, im)
            });
            rep.push(m);
        }
        let labels = (1..=dim).map(|i| format!("X{i}")).collect();
        Self::from_parts(spec.label.clone(), labels, sc, rep)
    }

    pub fn from_spec_json(json: &str) -> Result<Self> {
        let spec: AlgebraSpec = serde_json::from_str(json)?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        let dim = self.dim;
        let mut triplets = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = self.c(i, j, k);
                    if v != 0.0 {
                        triplets.push((i, j, k, v));
                    }
                }
            }
        }
        let nrep = self.defining_rep[0].nrows();
        let rep = self
            .defining_rep
            .iter()
            .map(|m| {
                let mut flat = Vec::with_capacity(nrep * nrep);
                for r in 0..nrep {
                    for c in 0..nrep {
                        flat.push([m[(r, c)].re, m[(r, c)].im]);
                    }
                }
                flat
            })
            .collect();
        AlgebraSpec {
            label: self.label.clone(),
            dim,
            structure_constants: triplets,
            defining_rep: rep,
        }
    }

    /// Structure constant `c[i][j][k]`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.structure_constants[(i * self.dim + j) * self.dim + k]
    }

    /// Matrix of `ad_{X_i}` on coefficient vectors: column `j` is `[X_i, X_j]`.
    pub fn ad_basis(&self, i: usize) -> RMatrix {
        RMatrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k))
    }

    /// `ad` of a real element.
    pub fn ad_real(&self, x: &RVector) -> RMatrix {
        let mut m = RMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i] != 0.0 {
                m += self.ad_basis(i) * x[i];
            }
        }
        m
    }

    /// Complexified `ad` of a complex element.
    pub fn ad_complex(&self, w: &ComplexElement) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if w.coeffs[i] != Cf::new(0.0, 0.0) {
                m += linalg::to_complex(&self.ad_basis(i)) * w.coeffs[i];
            }
        }
        m
    }

    /// Bilinear bracket `[W, Z]` on the complexification.
    pub fn bracket(&self, w: &ComplexElement, z: &ComplexElement) -> Result<ComplexElement> {
        if w.dim() != self.dim || z.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: w.dim().max(z.dim()),
            });
        }
        Ok(ComplexElement::new(self.ad_complex(w) * &z.coeffs))
    }

    /// Defining-representation matrix of a complex element,
    /// extended C-linearly.
    pub fn rep_of(&self, w: &ComplexElement) -> CMatrix {
        let n = self.defining_rep[0].nrows();
        let mut m = CMatrix::zeros(n, n);
        for i in 0..self.dim {
            if w.coeffs[i] != Cf::new(0.0, 0.0) {
                m += &self.defining_rep[i] * w.coeffs[i];
            }
        }
        m
    }

    /// Basis indices of the builder-provided Cartan subalgebra, if any.
    pub fn standard_cartan_indices(&self) -> Option<&[usize]> {
        self.standard_cartan.as_deref()
    }
}

/// One line of a diagnostic report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
}

/// Report produced by [`check_algebra`].
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub label: String,
    pub checks: Vec<CheckItem>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

/// Validate every structural invariant of a [`LieAlgebra`], reporting each
/// with a pass flag and a residual. Never fails; broken inputs simply
/// produce failing lines.
pub fn check_algebra(algebra: &LieAlgebra) -> AlgebraReport {
    let tol = Tol::global();
    let n = algebra.dim;
    let mut checks = Vec::new();

    // c[i][j][k] = -c[j][i][k]
    let mut anti = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                anti = anti.max((algebra.c(i, j, k) + algebra.c(j, i, k)).abs());
            }
        }
    }
    checks.push(CheckItem {
        name: "antisymmetry".into(),
        passed: anti < tol.residual,
        residual: anti,
    });

    // Jacobi identity on basis triples.
    let ads: Vec<RMatrix> = (0..n).map(|i| algebra.ad_basis(i)).collect();
    let mut jacobi = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let bij = RVector::from_fn(n, |k, _| algebra.c(i, j, k));
            for k in 0..n {
                let bjk = RVector::from_fn(n, |m, _| algebra.c(j, k, m));
                let bki = RVector::from_fn(n, |m, _| algebra.c(k, i, m));
                // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
                let total = algebra.ad_real(&bij).column(k).into_owned()
                    - &ads[i] * &bjk
                    - &ads[j] * &bki;
                jacobi = jacobi.max(total.amax());
            }
        }
    }
    checks.push(CheckItem {
        name: "jacobi".into(),
        passed: jacobi < tol.residual,
        residual: jacobi,
    });

    // Killing form symmetric positive definite, spread-checked.
    let kf = KillingForm::of(algebra);
    let sym = linalg::opnorm_real(&(&kf.gram - kf.gram.transpose()));
    checks.push(CheckItem {
        name: "killing_symmetric".into(),
        passed: sym < tol.residual,
        residual: sym,
    });
    let eigs = kf.gram.clone().symmetric_eigen().eigenvalues;
    let min_eig = eigs.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_eig = eigs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let definite = max_eig > 0.0 && min_eig > tol.residual * max_eig;
    checks.push(CheckItem {
        name: "killing_positive_definite".into(),
        passed: definite,
        residual: if definite { 0.0 } else { (tol.residual * max_eig - min_eig).max(0.0) },
    });

    // Ad-invariance: Kil([Z,X],Y) + Kil(X,[Z,Y]) = 0 on basis triples.
    let mut adinv = 0.0_f64;
    for adz in &ads {
        let m = adz.transpose() * &kf.gram + &kf.gram * adz;
        adinv = adinv.max(m.amax());
    }
    checks.push(CheckItem {
        name: "killing_ad_invariant".into(),
        passed: adinv < tol.residual * kf.gram.amax().max(1.0),
        residual: adinv,
    });

    // Defining rep: skew-adjoint, homomorphism, faithful.
    let mut skew = 0.0_f64;
    for m in &algebra.defining_rep {
        skew = skew.max(linalg::opnorm(&(m + m.adjoint())));
    }
    checks.push(CheckItem {
        name: "defining_rep_skew_adjoint".into(),
        passed: skew < tol.residual,
        residual: skew,
    });

    let mut homo = 0.0_f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut expected = CMatrix::zeros(
                algebra.defining_rep[0].nrows(),
                algebra.defining_rep[0].ncols(),
            );
            for k in 0..n {
                let c = algebra.c(i, j, k);
                if c != 0.0 {
                    expected += &algebra.defining_rep[k] * Cf::new(c, 0.0);
                }
            }
            let comm = &algebra.defining_rep[i] * &algebra.defining_rep[j]
                - &algebra.defining_rep[j] * &algebra.defining_rep[i];
            homo = homo.max(linalg::opnorm(&(comm - expected)));
        }
    }
    checks.push(CheckItem {
        name: "defining_rep_homomorphism".into(),
        passed: homo < tol.residual,
        residual: homo,
    });

    let nrep = algebra.defining_rep[0].nrows();
    let mut flat = RMatrix::zeros(2 * nrep * nrep, n);
    for (k, m) in algebra.defining_rep.iter().enumerate() {
        for (idx, c) in m.iter().enumerate() {
            flat[(idx, k)] = c.re;
            flat[(nrep * nrep + idx, k)] = c.im;
        }
    }
    let rank = linalg::rank_from_singular_values(
        &linalg::singular_values(&linalg::to_complex(&flat)),
        tol.rank_rel,
    );
    checks.push(CheckItem {
        name: "defining_rep_faithful".into(),
        passed: rank == n,
        residual: (n - rank) as f64,
    });

    AlgebraReport {
        label: algebra.label.clone(),
        checks,
    }
}
