//! Dense real-symmetric, complex-Hermitian, and symmetric-tridiagonal
//! eigensolvers, Gershgorin bounds, Rayleigh quotients, and tolerance-aware
//! spectrum multiset algebra.
//!
//! Eigenvalues are reported unclustered and ascending; multiplicity clustering
//! happens only at display time via [`Spectrum::clustered`].

mod eig;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for internally computed spectra.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Tolerance against reference values printed to four decimals.
pub const PRINTED_TOL: f64 = 5e-4;

/// Iteration cap factor: a solve on an m×m matrix may take at most 64·m
/// QL iterations before it errors out.
const ITER_CAP_FACTOR: usize = 64;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMat {
    n: usize,
    data: Vec<f64>,
}

impl DenseMat {
    pub fn zeros(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = DenseMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        Ok(DenseMat::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {0}x{0}, vector has length {1}",
                self.n,
                v.len()
            )));
        }
        Ok((0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Max absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .map(|v| v.abs())
                    .sum()
            })
            .fold(0.0, f64::max)
    }

    fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

/// Ascending real eigenvalue multiset with its clustering tolerance.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

/// Wire schema for a spectrum: `{"n": int, "tol": float, "values": [...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub tol: f64,
    pub values: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Second-smallest value (list position 2 of the ascending spectrum).
    pub fn fiedler(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    /// Cluster into (representative, multiplicity) pairs: values whose
    /// successive gaps stay within `tol` share a cluster; the representative
    /// is the cluster mean.
    pub fn clustered(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.values.len() {
            let mut j = i;
            while j + 1 < self.values.len() && self.values[j + 1] - self.values[j] <= tol {
                j += 1;
            }
            let count = j - i + 1;
            let mean = self.values[i..=j].iter().sum::<f64>() / count as f64;
            out.push((mean, count));
            i = j + 1;
        }
        out
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            n: self.values.len(),
            tol: self.tol,
            values: self.values.clone(),
        }
    }
}

/// Complex Hermitian matrix; construction keeps `a[j][i] == conj(a[i][j])`
/// bitwise.
#[derive(Debug, Clone)]
pub struct HermMatrix {
    m: usize,
    data: Vec<Complex64>,
}

impl HermMatrix {
    pub fn zeros(m: usize) -> Self {
        HermMatrix {
            m,
            data: vec![Complex64::new(0.0, 0.0); m * m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.m + j]
    }

    /// Set entries (i, j) and (j, i) to v and conj(v). For i == j the
    /// imaginary part must be (near) zero and is dropped.
    pub fn set_pair(&mut self, i: usize, j: usize, v: Complex64) -> Result<()> {
        if i == j {
            if v.im.abs() > 1e-12 * (1.0 + v.re.abs()) {
                return Err(Error::NotHermitian);
            }
            self.data[i * self.m + i] = Complex64::new(v.re, 0.0);
        } else {
            self.data[i * self.m + j] = v;
            self.data[j * self.m + i] = v.conj();
        }
        Ok(())
    }

    /// Add v to entry (i, j) and conj(v) to (j, i).
    pub fn add_pair(&mut self, i: usize, j: usize, v: Complex64) -> Result<()> {
        let cur = self.get(i, j);
        self.set_pair(i, j, cur + v)
    }

    pub fn from_entries(m: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != m * m {
            return Err(Error::DimensionMismatch("entry count".into()));
        }
        let scale = entries.iter().fold(0.0f64, |s, z| s.max(z.norm()));
        for i in 0..m {
            for j in i..m {
                let defect = (entries[i * m + j] - entries[j * m + i].conj()).norm();
                if defect > 1e-12 * (1.0 + scale) {
                    return Err(Error::NotHermitian);
                }
            }
        }
        let mut h = HermMatrix::zeros(m);
        for i in 0..m {
            for j in i..m {
                h.set_pair(i, j, entries[i * m + j])?;
            }
        }
        Ok(h)
    }

    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.m {
            return Err(Error::DimensionMismatch("Hermitian matvec".into()));
        }
        Ok((0..self.m)
            .map(|i| {
                self.data[i * self.m..(i + 1) * self.m]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }
}

/// Tridiagonal matrix: `diag` of length m, `sub`/`sup` of length m-1.
/// Symmetric iff `sub == sup` elementwise.
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiag {
    pub diag: Vec<f64>,
    pub sub: Vec<f64>,
    pub sup: Vec<f64>,
}

impl TriDiag {
    pub fn new(diag: Vec<f64>, sub: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || sub.len() + 1 != diag.len() || sup.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch(
                "tridiagonal bands must have length m-1".into(),
            ));
        }
        Ok(TriDiag { diag, sub, sup })
    }

    pub fn m(&self) -> usize {
        self.diag.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }

    pub fn to_dense(&self) -> DenseMat {
        let m = self.m();
        DenseMat::from_fn(m, |i, j| {
            if i == j {
                self.diag[i]
            } else if j + 1 == i {
                self.sub[j]
            } else if i + 1 == j {
                self.sup[i]
            } else {
                0.0
            }
        })
    }

    /// Leading principal submatrix of order m-1.
    pub fn leading_principal(&self) -> TriDiag {
        let m = self.m();
        TriDiag {
            diag: self.diag[..m - 1].to_vec(),
            sub: self.sub[..m.saturating_sub(2)].to_vec(),
            sup: self.sup[..m.saturating_sub(2)].to_vec(),
        }
    }

    /// det(T - x·I) by the three-term recurrence. For a tridiagonal matrix the
    /// characteristic polynomial depends on the bands only through the
    /// products sub[i]·sup[i], which is what makes diagonal symmetrization a
    /// spectrum-preserving move.
    pub fn charpoly_at(&self, x: f64) -> f64 {
        let m = self.m();
        let mut p_prev = 1.0;
        let mut p = self.diag[0] - x;
        for i in 1..m {
            let next = (self.diag[i] - x) * p - self.sub[i - 1] * self.sup[i - 1] * p_prev;
            p_prev = p;
            p = next;
        }
        p
    }
}

fn check_symmetric(a: &DenseMat) -> Result<()> {
    let scale = 1.0 + a.max_abs();
    if a.symmetry_defect() > 1e-12 * scale {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// All eigenvalues of a real symmetric matrix, ascending.
pub fn eig_sym(a: &DenseMat) -> Result<Spectrum> {
    Ok(eig_sym_full(a)?.0)
}

/// Eigenvalues plus an orthonormal eigenvector matrix (eigenvectors are the
/// columns, ordered as the eigenvalues).
pub fn eig_sym_full(a: &DenseMat) -> Result<(Spectrum, DenseMat)> {
    check_symmetric(a)?;
    let n = a.n();
    if n == 0 {
        return Ok((Spectrum::new(vec![], DEFAULT_TOL), DenseMat::zeros(0)));
    }
    let mut v = a.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    eig::tred2(n, &mut v, &mut d, &mut e);
    // tred2 stores the coupling of rows i-1, i in e[i]; tql wants it in sub[i-1].
    let sub: Vec<f64> = (0..n - 1).map(|i| e[i + 1]).collect();
    eig::tql(n, &mut d, &sub, Some(&mut v), ITER_CAP_FACTOR * n.max(2))?;
    Ok((Spectrum::new(d, DEFAULT_TOL), DenseMat { n, data: v }))
}

fn embed_hermitian(h: &HermMatrix) -> DenseMat {
    // H = X + iY with X symmetric, Y antisymmetric embeds as the symmetric
    // 2m x 2m matrix [[X, -Y], [Y, X]]; every eigenvalue of H appears twice.
    let m = h.m();
    DenseMat::from_fn(2 * m, |i, j| {
        let z = h.get(i % m, j % m);
        match (i < m, j < m) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// All eigenvalues of a Hermitian matrix, ascending, via the real 2m×2m
/// symmetric embedding.
pub fn eig_herm(h: &HermMatrix) -> Result<Spectrum> {
    let (doubled, _) = eig_sym_full(&embed_hermitian(h))?;
    let vals: Vec<f64> = doubled.values().iter().step_by(2).copied().collect();
    Ok(Spectrum::new(vals, DEFAULT_TOL))
}

/// Hermitian eigenvalues plus one (unit) eigenvector per eigenvalue.
pub fn eig_herm_full(h: &HermMatrix) -> Result<(Spectrum, Vec<Vec<Complex64>>)> {
    let m = h.m();
    let (doubled, q) = eig_sym_full(&embed_hermitian(h))?;
    let mut vals = Vec::with_capacity(m);
    let mut vecs = Vec::with_capacity(m);
    for t in 0..m {
        let col = q.column(2 * t);
        let mut z: Vec<Complex64> = (0..m).map(|i| Complex64::new(col[i], col[m + i])).collect();
        let norm = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for c in &mut z {
            *c /= norm;
        }
        vals.push(doubled.values()[2 * t]);
        vecs.push(z);
    }
    Ok((Spectrum::new(vals, DEFAULT_TOL), vecs))
}

/// Eigenvalues of a symmetric tridiagonal matrix, ascending.
pub fn eig_tridiag_sym(t: &TriDiag) -> Result<Spectrum> {
    if !t.is_symmetric() {
        return Err(Error::AsymmetricTridiagonal);
    }
    let m = t.m();
    let mut d = t.diag.clone();
    eig::tql(m, &mut d, &t.sub, None, ITER_CAP_FACTOR * m.max(2))?;
    Ok(Spectrum::new(d, DEFAULT_TOL))
}

/// Symmetric tridiagonal eigenvalues plus eigenvectors (columns).
pub fn eig_tridiag_sym_full(t: &TriDiag) -> Result<(Spectrum, DenseMat)> {
    if !t.is_symmetric() {
        return Err(Error::AsymmetricTridiagonal);
    }
    let m = t.m();
    let mut d = t.diag.clone();
    let mut v = vec![0.0; m * m];
    for i in 0..m {
        v[i * m + i] = 1.0;
    }
    eig::tql(m, &mut d, &t.sub, Some(&mut v), ITER_CAP_FACTOR * m.max(2))?;
    Ok((Spectrum::new(d, DEFAULT_TOL), DenseMat { n: m, data: v }))
}

/// Diagonal similarity onto a symmetric tridiagonal matrix with off-diagonal
/// sqrt(sub[i]·sup[i]). Requires every product to be nonnegative; the
/// eigenvalue multiset is unchanged.
pub fn symmetrize_tridiag(t: &TriDiag) -> Result<TriDiag> {
    let mut off = Vec::with_capacity(t.sub.len());
    for (i, (&s, &p)) in t.sub.iter().zip(&t.sup).enumerate() {
        let product = s * p;
        if product < 0.0 {
            return Err(Error::NotSymmetrizable { index: i, product });
        }
        off.push(product.sqrt());
    }
    Ok(TriDiag {
        diag: t.diag.clone(),
        sub: off.clone(),
        sup: off,
    })
}

/// Left endpoints of the Gershgorin circles of a tridiagonal matrix.
#[derive(Debug, Clone)]
pub struct GershgorinLeft {
    /// diag[i] minus the absolute off-diagonal radius of row i.
    pub per_row: Vec<f64>,
    /// First-row endpoint.
    pub l1: f64,
    /// Smallest middle-row endpoint (rows 1..m-1), absent for m < 3.
    pub l2: Option<f64>,
    /// Last-row endpoint.
    pub l3: f64,
}

pub fn gershgorin_left(t: &TriDiag) -> GershgorinLeft {
    let m = t.m();
    let per_row: Vec<f64> = (0..m)
        .map(|i| {
            let mut radius = 0.0;
            if i > 0 {
                radius += t.sub[i - 1].abs();
            }
            if i + 1 < m {
                radius += t.sup[i].abs();
            }
            t.diag[i] - radius
        })
        .collect();
    let l2 = if m >= 3 {
        Some(
            per_row[1..m - 1]
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min),
        )
    } else {
        None
    };
    GershgorinLeft {
        l1: per_row[0],
        l3: per_row[m - 1],
        l2,
        per_row,
    }
}

/// Rayleigh quotient vᵀLv / vᵀv.
pub fn rayleigh_quotient(l: &DenseMat, v: &[f64]) -> Result<f64> {
    let vv: f64 = v.iter().map(|x| x * x).sum();
    if vv == 0.0 {
        return Err(Error::ZeroVector);
    }
    let lv = l.matvec(v)?;
    let vlv: f64 = v.iter().zip(&lv).map(|(a, b)| a * b).sum();
    Ok(vlv / vv)
}

/// Sorted merge of two spectra; keeps the tolerance of `a`.
pub fn spectrum_union(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let mut vals = a.values().to_vec();
    vals.extend_from_slice(b.values());
    Spectrum::new(vals, a.tol())
}

/// Remove one element of `a` per element of `b`, matching each b-element to
/// the smallest unmatched a-element within `tol` (greedy on sorted lists).
pub fn spectrum_subtract(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<Spectrum> {
    let av = a.values();
    let mut keep = vec![true; av.len()];
    let mut i = 0usize;
    for &x in b.values() {
        while i < av.len() && av[i] < x - tol {
            i += 1;
        }
        if i >= av.len() || (av[i] - x).abs() > tol {
            return Err(Error::MultisetMismatch { value: x, tol });
        }
        keep[i] = false;
        i += 1;
    }
    let vals = av
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(&v, _)| v)
        .collect();
    Ok(Spectrum::new(vals, a.tol()))
}

/// Multiset inclusion b ⊆ a under `tol` with injective matching.
pub fn spectrum_contains(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    spectrum_subtract(a, b, tol).is_ok()
}

/// Multiset equality under `tol` with injective matching.
pub fn spectrum_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    a.len() == b.len()
        && a.values()
            .iter()
            .zip(b.values())
            .all(|(x, y)| (x - y).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn residual_ok(a: &DenseMat, lambda: f64, v: &[f64]) -> bool {
        let av = a.matvec(v).unwrap();
        let r: f64 = av
            .iter()
            .zip(v)
            .map(|(x, y)| (x - lambda * y).powi(2))
            .sum::<f64>()
            .sqrt();
        r <= 1e-8 * (1.0 + a.norm_inf())
    }

    #[test]
    fn two_by_two() {
        let a = DenseMat::from_rows(&[vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap();
        let s = eig_sym(&a).unwrap();
        assert!((s.values()[0] - 0.0).abs() < 1e-12);
        assert!((s.values()[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn cycle9_matches_closed_form() {
        let g = crate::graph::build_family("cycle:9").unwrap();
        let s = eig_sym(&crate::graph::laplacian(&g).to_dense()).unwrap();
        let mut expect: Vec<f64> = (0..9)
            .map(|j| 4.0 * (j as f64 * PI / 9.0).sin().powi(2))
            .collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in s.values().iter().zip(&expect) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn cycle4_spectrum() {
        let g = crate::graph::build_family("cycle:4").unwrap();
        let s = eig_sym(&crate::graph::laplacian(&g).to_dense()).unwrap();
        for (a, b) in s.values().iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvector_residuals_on_laplacians() {
        for spec in ["petersen", "hypercube:3", "complete_multipartite:2,2,3"] {
            let g = crate::graph::build_family(spec).unwrap();
            let a = crate::graph::laplacian(&g).to_dense();
            let (s, q) = eig_sym_full(&a).unwrap();
            for (t, &lambda) in s.values().iter().enumerate() {
                assert!(residual_ok(&a, lambda, &q.column(t)), "{spec} eigpair {t}");
            }
        }
    }

    #[test]
    fn laplacian_psd_and_trace() {
        for spec in [
            "cycle:11",
            "petersen",
            "star:7",
            "complete_multipartite:2,2,3",
        ] {
            let g = crate::graph::build_family(spec).unwrap();
            let s = eig_sym(&crate::graph::laplacian(&g).to_dense()).unwrap();
            assert!(s.min().unwrap() >= -1e-9, "{spec} min {}", s.min().unwrap());
            assert!(s.min().unwrap() <= 1e-9, "{spec}");
            let degree_sum: f64 = (0..g.n()).map(|v| g.degree(v) as f64).sum();
            let trace: f64 = s.values().iter().sum();
            assert!(
                (trace - degree_sum).abs() <= 1e-8 * (1.0 + degree_sum),
                "{spec}"
            );
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let a = DenseMat::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(eig_sym(&a), Err(Error::NotSymmetric)));
    }

    #[test]
    fn herm_diagonal_and_residual() {
        let mut h = HermMatrix::zeros(2);
        h.set_pair(0, 0, Complex64::new(2.0, 0.0)).unwrap();
        h.set_pair(1, 1, Complex64::new(4.0, 0.0)).unwrap();
        let s = eig_herm(&h).unwrap();
        assert_eq!(s.values(), &[2.0, 4.0]);

        let mut h = HermMatrix::zeros(3);
        h.set_pair(0, 0, Complex64::new(2.0, 0.0)).unwrap();
        h.set_pair(1, 1, Complex64::new(-1.0, 0.0)).unwrap();
        h.set_pair(2, 2, Complex64::new(0.5, 0.0)).unwrap();
        h.set_pair(0, 1, Complex64::new(1.0, -2.0)).unwrap();
        h.set_pair(1, 2, Complex64::new(0.0, 3.0)).unwrap();
        h.set_pair(0, 2, Complex64::new(-0.25, 0.75)).unwrap();
        let (s, vecs) = eig_herm_full(&h).unwrap();
        for (t, &lambda) in s.values().iter().enumerate() {
            let hv = h.matvec(&vecs[t]).unwrap();
            let r: f64 = hv
                .iter()
                .zip(&vecs[t])
                .map(|(x, y)| (x - lambda * y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(r < 1e-10, "residual {r}");
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let entries = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(1.0, 1.0), // should be the conjugate
            Complex64::new(1.0, 0.0),
        ];
        assert!(matches!(
            HermMatrix::from_entries(2, &entries),
            Err(Error::NotHermitian)
        ));
    }

    #[test]
    fn tridiag_diag_only() {
        let t = TriDiag::new(vec![2.0, 4.0, 4.0, 4.0], vec![0.0; 3], vec![0.0; 3]).unwrap();
        let s = eig_tridiag_sym(&t).unwrap();
        assert_eq!(s.values(), &[2.0, 4.0, 4.0, 4.0]);
    }

    #[test]
    fn tridiag_rejects_asymmetric_and_symmetrizes() {
        let t = TriDiag::new(vec![2.0, 4.0], vec![-4.0], vec![-2.0]).unwrap();
        assert!(matches!(
            eig_tridiag_sym(&t),
            Err(Error::AsymmetricTridiagonal)
        ));
        let s = symmetrize_tridiag(&t).unwrap();
        assert!((s.sub[0] - 8.0f64.sqrt()).abs() < 1e-15);
        // Similarity preserves the characteristic polynomial.
        for &x in eig_tridiag_sym(&s).unwrap().values() {
            let scale = t.diag.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            assert!(t.charpoly_at(x).abs() <= 1e-8 * scale.powi(2));
        }
    }

    #[test]
    fn symmetrize_zero_and_negative() {
        let t = TriDiag::new(vec![1.0, 5.0], vec![0.0], vec![3.0]).unwrap();
        let s = symmetrize_tridiag(&t).unwrap();
        assert_eq!(s.sub[0], 0.0);
        assert_eq!(eig_tridiag_sym(&s).unwrap().values(), &[1.0, 5.0]);

        let bad = TriDiag::new(vec![1.0, 5.0], vec![-1.0], vec![3.0]).unwrap();
        assert!(matches!(
            symmetrize_tridiag(&bad),
            Err(Error::NotSymmetrizable { index: 0, .. })
        ));
    }

    #[test]
    fn already_symmetric_symmetrize_is_identity_up_to_sign() {
        let t = TriDiag::new(vec![2.0, 4.0, 2.0], vec![1.5, 2.5], vec![1.5, 2.5]).unwrap();
        let s = symmetrize_tridiag(&t).unwrap();
        for (a, b) in t.sub.iter().zip(&s.sub) {
            assert!((a.abs() - b).abs() < 1e-15);
        }
    }

    #[test]
    fn rayleigh_basics() {
        let g = crate::graph::build_family("cycle:9").unwrap();
        let l = crate::graph::laplacian(&g).to_dense();
        let ones = vec![1.0; 9];
        assert!(rayleigh_quotient(&l, &ones).unwrap().abs() < 1e-12);
        assert!(matches!(
            rayleigh_quotient(&l, &[0.0; 9]),
            Err(Error::ZeroVector)
        ));
        let (s, q) = eig_sym_full(&l).unwrap();
        let v = q.column(3);
        assert!((rayleigh_quotient(&l, &v).unwrap() - s.values()[3]).abs() < 1e-9);
    }

    #[test]
    fn union_merges_sorted() {
        let a = Spectrum::new(vec![0.0, 3.0], DEFAULT_TOL);
        let b = Spectrum::new(vec![1.0, 3.0], DEFAULT_TOL);
        assert_eq!(spectrum_union(&a, &b).values(), &[0.0, 1.0, 3.0, 3.0]);
    }

    #[test]
    fn subtract_and_contains() {
        let a = Spectrum::new(vec![0.0, 4.0, 4.0, 4.0], DEFAULT_TOL);
        let b = Spectrum::new(vec![4.0, 4.0], DEFAULT_TOL);
        let d = spectrum_subtract(&a, &b, 1e-9).unwrap();
        assert_eq!(d.values(), &[0.0, 4.0]);
        assert!(spectrum_contains(&a, &b, 1e-9));
        assert!(!spectrum_contains(&b, &a, 1e-9));
        let c = Spectrum::new(vec![1.0], DEFAULT_TOL);
        assert!(matches!(
            spectrum_subtract(&a, &c, 1e-9),
            Err(Error::MultisetMismatch { .. })
        ));
    }

    #[test]
    fn clustering() {
        let s = Spectrum::new(vec![0.0, 2.0, 2.0 + 1e-9, 5.0], DEFAULT_TOL);
        let c = s.clustered(1e-6);
        assert_eq!(c.len(), 3);
        assert_eq!(c[1].1, 2);
    }

    proptest! {
        /// Random symmetric matrices: sorted eigenvalues, trace preserved,
        /// residuals within the contract.
        #[test]
        fn eig_sym_contract(seed in 0u64..200) {
            let n = 2 + (seed % 9) as usize;
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
            };
            let mut a = DenseMat::zeros(n);
            for i in 0..n {
                for j in i..n {
                    let v = next();
                    a.set(i, j, v);
                    a.set(j, i, v);
                }
            }
            let (s, q) = eig_sym_full(&a).unwrap();
            let trace: f64 = (0..n).map(|i| a.get(i, i)).sum();
            let sum: f64 = s.values().iter().sum();
            prop_assert!((trace - sum).abs() <= 1e-8 * (1.0 + trace.abs()));
            for w in s.values().windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
            for (t, &lambda) in s.values().iter().enumerate() {
                prop_assert!(residual_ok(&a, lambda, &q.column(t)));
            }
            // Eigenvector columns are orthonormal.
            for i in 0..n {
                for j in i..n {
                    let dot: f64 = q.column(i).iter().zip(q.column(j)).map(|(a, b)| a * b).sum();
                    let expect = if i == j { 1.0 } else { 0.0 };
                    prop_assert!((dot - expect).abs() <= 1e-10);
                }
            }
        }

        /// Symmetrization preserves the characteristic polynomial at the
        /// computed eigenvalues.
        #[test]
        fn symmetrize_preserves_charpoly(seed in 0u64..200) {
            let m = 2 + (seed % 6) as usize;
            let mut state = seed.wrapping_add(7);
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
            };
            let diag: Vec<f64> = (0..m).map(|_| next()).collect();
            // Same-sign band pairs so products are nonnegative.
            let sub: Vec<f64> = (0..m - 1).map(|_| next().abs()).collect();
            let sup: Vec<f64> = (0..m - 1).map(|_| next().abs() * 2.0).collect();
            let t = TriDiag::new(diag, sub, sup).unwrap();
            let s = symmetrize_tridiag(&t).unwrap();
            let scale = t.to_dense().norm_inf().max(1.0);
            for &x in eig_tridiag_sym(&s).unwrap().values() {
                // |p(x)| should vanish relative to the polynomial's scale.
                prop_assert!(t.charpoly_at(x).abs() <= 1e-7 * scale.powi(m as i32));
            }
        }

        /// Gershgorin: every eigenvalue of a symmetric tridiagonal matrix lies
        /// right of the smallest left endpoint.
        #[test]
        fn gershgorin_bounds_spectrum(seed in 0u64..200) {
            let m = 2 + (seed % 8) as usize;
            let mut state = seed.wrapping_add(13);
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
            };
            let diag: Vec<f64> = (0..m).map(|_| next()).collect();
            let off: Vec<f64> = (0..m - 1).map(|_| next()).collect();
            let t = TriDiag::new(diag, off.clone(), off).unwrap();
            let s = eig_tridiag_sym(&t).unwrap();
            let g = gershgorin_left(&t);
            let left = g.per_row.iter().copied().fold(f64::INFINITY, f64::min);
            prop_assert!(s.values()[0] >= left - 1e-9);
        }
    }
}
