//! Closed-form oracles for validating representation construction.
//!
//! Nothing here touches tensor products or explicit matrices: dimensions
//! come from the Weyl product formula, multiplicities from the Freudenthal
//! recursion, and root counts from a purely combinatorial build over the
//! integer Cartan matrix. These are the independent cross-checks for the
//! main construction pipeline.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::irrep::HighestWeight;
use crate::linalg::{RMatrix, RVector};
use crate::roots::RootDatum;

/// Half-sum of the positive roots, in Cartan coordinates.
#[derive(Debug, Clone)]
pub struct WeylVector {
    pub rho: RVector,
}

pub fn weyl_vector(rd: &RootDatum) -> WeylVector {
    let r = rd.rank();
    let mut rho = RVector::zeros(r);
    for root in rd.positive_roots() {
        rho += &root.values;
    }
    WeylVector { rho: rho * 0.5 }
}

/// Dimension of the irreducible representation with the given highest
/// weight, via the product over positive roots of
/// `i(l+rho)(H_a) / i rho(H_a)` (the coroot normalization cancels the
/// root-length factors of the usual pairing form).
pub fn weyl_dimension(rd: &RootDatum, weight: &HighestWeight) -> Result<u64> {
    let labels: Vec<f64> = weight.dynkin_labels.iter().map(|&n| n as f64).collect();
    let lam = rd.weight_coords(&labels)?;
    let rho = weyl_vector(rd).rho;
    let shifted = &lam + &rho;
    let mut dim = 1.0_f64;
    for p in 0..rd.positives.len() {
        let num = rd.dynkin_pairing(p, &shifted);
        let den = rd.dynkin_pairing(p, &rho);
        if den.abs() < 1e-12 {
            return Err(Error::BrokenRootDatum(
                "Weyl vector pairs to zero against a positive coroot".into(),
            ));
        }
        dim *= num / den;
    }
    let rounded = dim.round();
    if (dim - rounded).abs() > 1e-6 || rounded < 1.0 {
        return Err(Error::BrokenRootDatum(format!(
            "Weyl dimension {dim} is not a positive integer"
        )));
    }
    Ok(rounded as u64)
}

/// One weight of a representation with its multiplicity.
#[derive(Debug, Clone)]
pub struct WeightEntry {
    /// Integer labels `i mu(H_{a_i})` over the simple roots.
    pub labels: Vec<i64>,
    /// Cartan coordinates of the weight.
    pub coords: RVector,
    pub multiplicity: usize,
}

/// Weight-multiplicity table keyed by integer labels.
#[derive(Debug, Clone)]
pub struct WeightTable {
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, labels: &[i64]) -> usize {
        self.entries
            .iter()
            .find(|e| e.labels == labels)
            .map(|e| e.multiplicity)
            .unwrap_or(0)
    }
}

/// Weight multiplicities of the irreducible representation with highest
/// weight `l`, by the Freudenthal recursion from the top weight down.
///
/// All weight bookkeeping is exact: weights are tracked by their integer
/// label vectors, and only the inner products use floating point.
pub fn freudenthal_multiplicities(rd: &RootDatum, weight: &HighestWeight) -> Result<WeightTable> {
    let r = rd.rank();
    if weight.dynkin_labels.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: weight.dynkin_labels.len(),
        });
    }

    // Dual inner product on weights expressed in label coordinates:
    // ip(m, n) = (D^-1 m)^T Gh^-1 (D^-1 n), with D the simple pairing
    // matrix and Gh the Killing gram restricted to the Cartan.
    let d = rd.simple_pairing_matrix();
    let d_inv = d
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::BrokenRootDatum("simple coroots are degenerate".into()))?;
    let gh = RMatrix::from_fn(r, r, |i, j| {
        rd.kil.eval_real(&rd.cartan.basis[i], &rd.cartan.basis[j])
    });
    let gh_inv = gh
        .lu()
        .try_inverse()
        .ok_or(Error::SingularGram)?;
    let w_mat = d_inv.transpose() * gh_inv * &d_inv;
    let ip = |m: &[i64], n: &[i64]| -> f64 {
        let mv = RVector::from_fn(r, |i, _| m[i] as f64);
        let nv = RVector::from_fn(r, |i, _| n[i] as f64);
        (&w_mat * nv).dot(&mv)
    };

    // Positive roots as integer label vectors.
    let mut pos_labels: Vec<Vec<i64>> = Vec::new();
    for p in &rd.positives {
        let labels = rd.weight_labels(&rd.roots[*p].values);
        let mut li = Vec::with_capacity(r);
        for v in labels {
            let rounded = v.round();
            if (v - rounded).abs() > 1e-6 {
                return Err(Error::BrokenRootDatum(format!(
                    "positive root has non-integer label {v}"
                )));
            }
            li.push(rounded as i64);
        }
        pos_labels.push(li);
    }

    // Height of each positive root: the coefficient sum of its expansion
    // over the simple roots, recovered from the Cartan matrix.
    let cm = rd.cartan_matrix()?;
    let a_mat = RMatrix::from_fn(r, r, |i, j| cm[i][j] as f64);
    let a_inv = a_mat
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::BrokenRootDatum("singular Cartan matrix".into()))?;
    let mut pos_heights: Vec<i64> = Vec::with_capacity(pos_labels.len());
    for labels in &pos_labels {
        let lv = RVector::from_fn(r, |i, _| labels[i] as f64);
        let coeffs = &a_inv * lv;
        let h = coeffs.iter().sum::<f64>();
        let hr = h.round();
        if (h - hr).abs() > 1e-6 || hr < 1.0 {
            return Err(Error::BrokenRootDatum(format!(
                "positive root has non-integer height {h}"
            )));
        }
        pos_heights.push(hr as i64);
    }

    let top: Vec<i64> = weight.dynkin_labels.clone();
    let rho: Vec<i64> = vec![1; r];
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let sub = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let scale_add = |a: &[i64], k: i64, b: &[i64]| -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + k * y).collect()
    };

    let top_shift = add(&top, &rho);
    let c2_top = ip(&top_shift, &top_shift);

    // Multiplicity and height-from-top per weight; the recursion for a
    // weight at height h reads only weights at strictly smaller heights,
    // so candidates are processed in ascending height order.
    let mut table: HashMap<Vec<i64>, (usize, i64)> = HashMap::new();
    table.insert(top.clone(), (1, 0));
    let mut pending: std::collections::BTreeMap<i64, Vec<Vec<i64>>> =
        std::collections::BTreeMap::new();
    for (alpha, &ha) in pos_labels.iter().zip(&pos_heights) {
        pending.entry(ha).or_default().push(sub(&top, alpha));
    }

    while let Some((height, batch)) = pending.pop_first() {
        for mu in batch {
            if table.contains_key(&mu) {
                continue;
            }
            let mu_shift = add(&mu, &rho);
            let denom = c2_top - ip(&mu_shift, &mu_shift);
            let mut rhs = 0.0;
            for alpha in &pos_labels {
                let mut k = 1i64;
                loop {
                    let up = scale_add(&mu, k, alpha);
                    match table.get(&up) {
                        Some(&(m, _)) => {
                            rhs += 2.0 * ip(&up, alpha) * m as f64;
                            k += 1;
                        }
                        None => break,
                    }
                }
            }
            if rhs.abs() < 1e-9 {
                continue; // not a weight of the representation
            }
            if denom <= 1e-9 {
                return Err(Error::BrokenRootDatum(format!(
                    "Freudenthal denominator {denom:.3e} vanishes off the top weight"
                )));
            }
            let m = rhs / denom;
            let m_round = m.round();
            if (m - m_round).abs() > 1e-6 || m_round < 0.0 {
                return Err(Error::BrokenRootDatum(format!(
                    "non-integer multiplicity {m} in the Freudenthal recursion"
                )));
            }
            if m_round > 0.0 {
                table.insert(mu.clone(), (m_round as usize, height));
                for (alpha, &ha) in pos_labels.iter().zip(&pos_heights) {
                    pending.entry(height + ha).or_default().push(sub(&mu, alpha));
                }
            }
        }
    }

    let mut entries: Vec<WeightEntry> = Vec::with_capacity(table.len());
    let mut heights: HashMap<Vec<i64>, i64> = HashMap::new();
    for (labels, (multiplicity, height)) in table {
        let coords = rd.weight_coords(&labels.iter().map(|&x| x as f64).collect::<Vec<_>>())?;
        heights.insert(labels.clone(), height);
        entries.push(WeightEntry {
            labels,
            coords,
            multiplicity,
        });
    }
    // Deterministic order: by height from the top, then lexicographic.
    entries.sort_by(|a, b| {
        heights[&a.labels]
            .cmp(&heights[&b.labels])
            .then(a.labels.cmp(&b.labels))
    });
    Ok(WeightTable { entries })
}

/// Total number of roots generated combinatorially from an integer Cartan
/// matrix `A[i][j] = <a_j, a_i^v>` by closing the simple roots under root
/// strings. Independent of any eigendecomposition.
pub fn root_count_from_cartan_matrix(cartan: &[Vec<i64>]) -> usize {
    let r = cartan.len();
    if r == 0 {
        return 0;
    }
    let mut positives: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect();
    let mut frontier = positives.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for (i, cartan_row) in cartan.iter().enumerate() {
                // p = length of the down-string from beta in direction a_i
                let mut p = 0i64;
                loop {
                    let down: Vec<i64> = beta
                        .iter()
                        .enumerate()
                        .map(|(j, &c)| c - (p + 1) * if j == i { 1 } else { 0 })
                        .collect();
                    if positives.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(cartan_row).map(|(b, a)| b * a).sum();
                if p - pairing > 0 {
                    let up: Vec<i64> = beta
                        .iter()
                        .enumerate()
                        .map(|(j, &c)| c + if j == i { 1 } else { 0 })
                        .collect();
                    if !positives.contains(&up) {
                        positives.push(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    2 * positives.len()
}
