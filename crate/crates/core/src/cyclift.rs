//! Cyclic voltage graphs, lifts, Laplacian base matrices B(z), and the
//! reduction of the F_2(C_n) eigenproblem to n small tridiagonal solves.
//!
//! Odd n = 2ν+1: F_2(C_n) is a genuine lift of a ν-vertex path with doubled
//! edges and a loop, over Z_n. Even n = 4r+2: a genuine lift of a path on
//! 4r+1 vertices with chord arcs, over Z_{2r+1}. For every even n the ν×ν
//! polynomial matrix `bstar` is not a lift base ("over-lift"): the union of
//! its n evaluations carries spec L plus ν extra eigenvalues equal to 4,
//! which [`f2_cycle_spectrum`] removes.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    eig_herm_full, eig_tridiag_sym, symmetrize_tridiag, HermMatrix, Spectrum, TriDiag, DEFAULT_TOL,
};
use crate::token::{binomial, subset_rank, token_graph};

/// Voltage graph over Z_m. Each entry is an undirected edge carrying the
/// voltage of its u→v arc; the reverse arc implicitly carries -volt, so arc
/// pairing always holds. Loops (u == v) and parallel edges are allowed.
#[derive(Debug, Clone)]
pub struct VoltageGraph {
    vertices: usize,
    modulus: usize,
    edges: Vec<VoltEdge>,
}

#[derive(Debug, Clone, Copy)]
pub struct VoltEdge {
    pub u: usize,
    pub v: usize,
    /// Voltage of the u→v arc, normalized into 0..m-1.
    pub volt: usize,
}

impl VoltageGraph {
    pub fn new(vertices: usize, modulus: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("group modulus must be >= 1".into()));
        }
        let m = modulus as i64;
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    n: vertices,
                });
            }
            out.push(VoltEdge {
                u,
                v,
                volt: w.rem_euclid(m) as usize,
            });
        }
        Ok(VoltageGraph {
            vertices,
            modulus,
            edges: out,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn edges(&self) -> &[VoltEdge] {
        &self.edges
    }

    /// Arc degree of u (loops count twice).
    pub fn degree(&self, u: usize) -> usize {
        self.edges
            .iter()
            .map(|e| {
                if e.u == u && e.v == u {
                    2
                } else if e.u == u || e.v == u {
                    1
                } else {
                    0
                }
            })
            .sum()
    }
}

/// Square matrix of integer-coefficient Laurent polynomials in z, exponents
/// normalized mod the group order.
#[derive(Debug, Clone)]
pub struct LaurentMatrix {
    dim: usize,
    modulus: usize,
    /// entries[i*dim + j]: exponent -> coefficient.
    entries: Vec<BTreeMap<usize, i64>>,
}

impl LaurentMatrix {
    fn zeros(dim: usize, modulus: usize) -> Self {
        LaurentMatrix {
            dim,
            modulus,
            entries: vec![BTreeMap::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entry(&self, i: usize, j: usize) -> &BTreeMap<usize, i64> {
        &self.entries[i * self.dim + j]
    }

    fn add_term(&mut self, i: usize, j: usize, exp: usize, coeff: i64) {
        let e = exp % self.modulus;
        let map = &mut self.entries[i * self.dim + j];
        let c = map.entry(e).or_insert(0);
        *c += coeff;
        if *c == 0 {
            map.remove(&e);
        }
    }

    /// Evaluate at the r-th power of the primitive m-th root of unity.
    pub fn eval_at_root(&self, r: usize) -> Vec<Complex64> {
        let m = self.modulus;
        let root = |e: usize| {
            let angle = 2.0 * PI * ((e * r) % m) as f64 / m as f64;
            Complex64::new(angle.cos(), angle.sin())
        };
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim * self.dim];
        for (idx, map) in self.entries.iter().enumerate() {
            for (&e, &c) in map {
                out[idx] += root(e) * c as f64;
            }
        }
        out
    }

    /// Evaluation at z = 1: the coefficient sums, exact in integers.
    pub fn eval_at_one(&self) -> Vec<i64> {
        self.entries.iter().map(|map| map.values().sum()).collect()
    }

    pub fn row_sums_at_one(&self) -> Vec<i64> {
        let one = self.eval_at_one();
        (0..self.dim)
            .map(|i| one[i * self.dim..(i + 1) * self.dim].iter().sum())
            .collect()
    }

    /// True when entry (j,i) is the exponent-negated mirror of (i,j), which
    /// makes every unit-circle evaluation Hermitian. Holds for every genuine
    /// Laplacian base matrix; fails for the even-n over-lift matrix.
    pub fn is_conjugate_paired(&self) -> bool {
        let m = self.modulus;
        for i in 0..self.dim {
            for j in i..self.dim {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                if a.len() != b.len() {
                    return false;
                }
                for (&e, &c) in a {
                    if b.get(&((m - e % m) % m)) != Some(&c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Laplacian base matrix B(L) = -B(A) + B(D) of a voltage graph: entry (u,v)
/// is minus the sum of z^volt over arcs u→v, and the diagonal adds deg(u)·z⁰
/// (loops contribute both arc directions and count twice in the degree).
pub fn laplacian_base_matrix(vg: &VoltageGraph) -> LaurentMatrix {
    let m = vg.modulus();
    let mut b = LaurentMatrix::zeros(vg.vertices(), m);
    for e in vg.edges() {
        if e.u == e.v {
            b.add_term(e.u, e.u, e.volt, -1);
            b.add_term(e.u, e.u, (m - e.volt % m) % m, -1);
        } else {
            b.add_term(e.u, e.v, e.volt, -1);
            b.add_term(e.v, e.u, (m - e.volt % m) % m, -1);
        }
    }
    for u in 0..vg.vertices() {
        b.add_term(u, u, 0, vg.degree(u) as i64);
    }
    b
}

/// Hermitian evaluation of the base matrix at the r-th root of unity, built
/// directly from the arcs so conjugate pairs are bitwise exact.
pub fn base_matrix_herm(vg: &VoltageGraph, r: usize) -> Result<HermMatrix> {
    let m = vg.modulus();
    let nv = vg.vertices();
    let root = |e: usize| {
        let angle = 2.0 * PI * ((e * r) % m) as f64 / m as f64;
        Complex64::new(angle.cos(), angle.sin())
    };
    let mut h = HermMatrix::zeros(nv);
    for e in vg.edges() {
        let c = root(e.volt);
        if e.u == e.v {
            h.add_pair(e.u, e.u, Complex64::new(-2.0 * c.re, 0.0))?;
        } else {
            let (i, j, val) = if e.u < e.v {
                (e.u, e.v, -c)
            } else {
                (e.v, e.u, -c.conj())
            };
            h.add_pair(i, j, val)?;
        }
    }
    for u in 0..nv {
        h.add_pair(u, u, Complex64::new(vg.degree(u) as f64, 0.0))?;
    }
    Ok(h)
}

/// The lift graph: vertex (u, g) at index u·m + g, one edge
/// (u,g) ~ (v, g+volt) per base edge per group element. Errors when the lift
/// would carry a loop or a multi-edge.
pub fn lift_graph(vg: &VoltageGraph) -> Result<Graph> {
    let m = vg.modulus();
    let n = vg.vertices() * m;
    let idx = |u: usize, g: usize| u * m + g;
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(vg.edges().len() * m);
    for e in vg.edges() {
        for g in 0..m {
            let a = idx(e.u, g);
            let b = idx(e.v, (g + e.volt) % m);
            if a == b {
                return Err(Error::LiftNotSimple(format!(
                    "loop at lift vertex ({}, {g})",
                    e.u
                )));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::LiftNotSimple(format!(
                    "parallel lift edge between {} and {}",
                    key.0, key.1
                )));
            }
            edges.push(key);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Lift spectrum via the base matrix: the union over all m-th roots of unity
/// of the Hermitian evaluations. |V(base)|·m eigenvalues.
pub fn lift_spectrum(vg: &VoltageGraph) -> Result<Spectrum> {
    let mut vals = Vec::with_capacity(vg.vertices() * vg.modulus());
    for r in 0..vg.modulus() {
        let h = base_matrix_herm(vg, r)?;
        vals.extend_from_slice(crate::linalg::eig_herm(&h)?.values());
    }
    Ok(Spectrum::new(vals, DEFAULT_TOL))
}

/// Base graph of F_2(C_n) for odd n = 2ν+1: path u_1..u_ν over Z_n with each
/// path edge doubled (voltages 0 and -1 on the forward arcs) and a loop of
/// voltage ν at u_ν.
pub fn odd_cycle_base(n: usize) -> Result<VoltageGraph> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::InvalidInput(format!(
            "odd cycle base needs odd n >= 5, got {n}"
        )));
    }
    let nu = (n - 1) / 2;
    let mut edges = Vec::new();
    for i in 0..nu - 1 {
        edges.push((i, i + 1, 0i64));
        edges.push((i, i + 1, -1i64));
    }
    edges.push((nu - 1, nu - 1, nu as i64));
    VoltageGraph::new(nu, n, &edges)
}

/// Canonical map from lift indices of [`odd_cycle_base`] to colex ranks of
/// F_2(C_n): base vertex h-1 in copy j is the pair {j, j+h}.
pub fn odd_cycle_vertex_map(n: usize) -> Result<Vec<usize>> {
    let vg = odd_cycle_base(n)?;
    let nu = vg.vertices();
    let mut map = vec![0usize; nu * n];
    for idx in 0..nu {
        let h = idx + 1;
        for j in 0..n {
            map[idx * n + j] = rank_pair(n, j, j + h);
        }
    }
    Ok(map)
}

fn rank_pair(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a % n, b % n);
    let pair = if a < b { [a, b] } else { [b, a] };
    subset_rank(&pair).expect("distinct pair")
}

/// Base graph of F_2(C_n) for n = 4r+2: the path u_{-2r}..u_{2r} over
/// Z_{2r+1} (path arcs voltage 0) plus chord families
/// a_i = u_{-i}→u_{i-1} and b_i = u_i→u_{-i+1}, i = 1..2r, all with voltage r.
pub fn even_4r2_base(n: usize) -> Result<VoltageGraph> {
    if n < 6 || n % 4 != 2 {
        return Err(Error::InvalidInput(format!(
            "base needs n = 4r+2 with r >= 1, got {n}"
        )));
    }
    let r = (n - 2) / 4;
    let nv = 4 * r + 1;
    let m = 2 * r + 1;
    // u_j lives at index j + 2r.
    let at = |j: i64| (j + 2 * r as i64) as usize;
    let mut edges = Vec::new();
    for idx in 0..nv - 1 {
        edges.push((idx, idx + 1, 0i64));
    }
    for i in 1..=2 * r as i64 {
        edges.push((at(-i), at(i - 1), r as i64));
        edges.push((at(i), at(-i + 1), r as i64));
    }
    VoltageGraph::new(nv, m, &edges)
}

/// Canonical map from lift indices of [`even_4r2_base`] to colex ranks of
/// F_2(C_n): copy g of u_j is {2g, 2g+2r+1+j} for j <= 0 and
/// {2g+2r+1, 2g-j} for j >= 0.
pub fn even_4r2_vertex_map(n: usize) -> Result<Vec<usize>> {
    let vg = even_4r2_base(n)?;
    let r = (n - 2) / 4;
    let m = vg.modulus();
    let nv = vg.vertices();
    let mut map = vec![0usize; nv * m];
    for idx in 0..nv {
        let j = idx as i64 - 2 * r as i64;
        for g in 0..m {
            let pair = if j <= 0 {
                (
                    2 * g,
                    (2 * g as i64 + 2 * r as i64 + 1 + j).rem_euclid(n as i64) as usize,
                )
            } else {
                (
                    (2 * g + 2 * r + 1) % n,
                    (2 * g as i64 - j).rem_euclid(n as i64) as usize,
                )
            };
            map[idx * m + g] = rank_pair(n, pair.0, pair.1);
        }
    }
    Ok(map)
}

/// The ν×ν tridiagonal matrix similar to B(z) at z = exp(i·2πr/n).
///
/// Odd n: symmetric, diagonal (2, 4, .., 4 + 2(-1)^{r+1}cos(rπ/n)),
/// off-diagonals 2cos(rπ/n). Even n (over-lift): same band 2cos(rπ/n) except
/// the last sub entry 2cos(rπ/n) + 2cos(r(n-1)π/n), diagonal (2, 4, .., 4).
pub fn bstar(n: usize, r: usize) -> Result<TriDiag> {
    if n < 4 {
        return Err(Error::InvalidInput("bstar needs n >= 4".into()));
    }
    if r >= n {
        return Err(Error::InvalidInput(format!("r={r} out of range for n={n}")));
    }
    let nu = n / 2;
    let c = 2.0 * (r as f64 * PI / n as f64).cos();
    let mut diag = vec![4.0; nu];
    diag[0] = 2.0;
    let mut sub = vec![c; nu - 1];
    let sup = vec![c; nu - 1];
    if n % 2 == 1 {
        let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
        diag[nu - 1] = 4.0 + sign * c;
    } else {
        sub[nu - 2] = c + 2.0 * (r as f64 * (n as f64 - 1.0) * PI / n as f64).cos();
    }
    TriDiag::new(diag, sub, sup)
}

/// The even-n over-lift polynomial matrix B(z): tridiagonal with super
/// -1 - z^{-1}, sub -1 - z, diagonal (2, 4, ..., 4), and corner sub entry
/// -1 - z - z^ν - z^{ν+1}. Not a lift base; all evaluations together carry
/// spec L(F_2(C_n)) plus ν extra eigenvalues 4.
pub fn overlift_base_matrix(n: usize) -> Result<LaurentMatrix> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(
            "over-lift matrix needs even n >= 4".into(),
        ));
    }
    let nu = n / 2;
    let mut b = LaurentMatrix::zeros(nu, n);
    b.add_term(0, 0, 0, 2);
    for i in 1..nu {
        b.add_term(i, i, 0, 4);
    }
    for i in 0..nu - 1 {
        b.add_term(i, i + 1, 0, -1);
        b.add_term(i, i + 1, n - 1, -1);
        b.add_term(i + 1, i, 0, -1);
        b.add_term(i + 1, i, 1, -1);
    }
    b.add_term(nu - 1, nu - 2, nu, -1);
    b.add_term(nu - 1, nu - 2, nu + 1, -1);
    Ok(b)
}

/// One row of the per-root decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct PerRoot {
    pub r: usize,
    pub eigs: Vec<f64>,
}

/// Full decomposition record behind [`f2_cycle_spectrum`].
#[derive(Debug, Clone)]
pub struct CycleSpectrumDetail {
    pub n: usize,
    /// "lift" for odd n (a genuine lift), "overlift" for even n.
    pub method: &'static str,
    pub per_r: Vec<PerRoot>,
    pub spectrum: Spectrum,
    pub lambda_removed: Vec<f64>,
}

/// Spectrum of one B*(r), handling the even-n asymmetric last row:
/// odd r splits off the eigenvalue 4 (last row is (0,..,0,4)); even r
/// symmetrizes, except r = ν which is diagonal.
fn bstar_spectrum(n: usize, r: usize) -> Result<Vec<f64>> {
    let t = bstar(n, r)?;
    if n % 2 == 1 {
        return Ok(eig_tridiag_sym(&t)?.values().to_vec());
    }
    let nu = n / 2;
    if r % 2 == 1 {
        let lead = t.leading_principal();
        let mut vals = eig_tridiag_sym(&lead)?.values().to_vec();
        vals.push(4.0);
        vals.sort_by(f64::total_cmp);
        Ok(vals)
    } else if r == nu {
        // cos(rπ/n) = 0: the matrix is diagonal up to roundoff.
        Ok(t.diag.clone())
    } else {
        Ok(eig_tridiag_sym(&symmetrize_tridiag(&t)?)?.values().to_vec())
    }
}

/// All C(n,2) Laplacian eigenvalues of F_2(C_n) from the n small matrices:
/// odd n unions the B*(r) spectra directly; even n assembles the over-lift
/// union and removes the ν spurious eigenvalues nearest 4 (each must lie
/// within 1e-6 of 4).
pub fn f2_cycle_spectrum_detail(n: usize) -> Result<CycleSpectrumDetail> {
    if n < 4 {
        return Err(Error::InvalidInput("needs n >= 4".into()));
    }
    let nu = n / 2;
    let mut per_r = Vec::with_capacity(n);
    let mut all = Vec::with_capacity(n * nu);
    for r in 0..n {
        let eigs = bstar_spectrum(n, r)?;
        all.extend_from_slice(&eigs);
        per_r.push(PerRoot { r, eigs });
    }
    if n % 2 == 1 {
        let spectrum = Spectrum::new(all, DEFAULT_TOL);
        debug_assert_eq!(spectrum.len(), binomial(n, 2));
        return Ok(CycleSpectrumDetail {
            n,
            method: "lift",
            per_r,
            spectrum,
            lambda_removed: Vec::new(),
        });
    }

    all.sort_by(f64::total_cmp);
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by(|&a, &b| {
        (all[a] - 4.0)
            .abs()
            .total_cmp(&(all[b] - 4.0).abs())
            .then(a.cmp(&b))
    });
    let tol = 1e-6;
    let found = order
        .iter()
        .take(nu)
        .filter(|&&i| (all[i] - 4.0).abs() <= tol)
        .count();
    if found != nu {
        return Err(Error::OverliftInconsistency {
            expected: nu,
            found,
            tol,
        });
    }
    let drop: std::collections::BTreeSet<usize> = order[..nu].iter().copied().collect();
    let mut lambda_removed = Vec::with_capacity(nu);
    let mut kept = Vec::with_capacity(all.len() - nu);
    for (i, v) in all.into_iter().enumerate() {
        if drop.contains(&i) {
            lambda_removed.push(v);
        } else {
            kept.push(v);
        }
    }
    let spectrum = Spectrum::new(kept, DEFAULT_TOL);
    debug_assert_eq!(spectrum.len(), binomial(n, 2));
    Ok(CycleSpectrumDetail {
        n,
        method: "overlift",
        per_r,
        spectrum,
        lambda_removed,
    })
}

/// Just the assembled spectrum of F_2(C_n).
pub fn f2_cycle_spectrum(n: usize) -> Result<Spectrum> {
    Ok(f2_cycle_spectrum_detail(n)?.spectrum)
}

/// Laplacian eigenvalue θ_j = 4 sin²(jπ/n) of C_n.
pub fn theta(n: usize, j: usize) -> f64 {
    4.0 * (j as f64 * PI / n as f64).sin().powi(2)
}

/// Eigenvector of L(F_2(C_n)) reconstructed from an eigenvector f of B(ζ^r).
#[derive(Debug, Clone)]
pub struct ReconstructedEigenvector {
    pub eigenvalue: f64,
    /// Indexed by colex rank of the token vertex {j, j+h}.
    pub values: Vec<Complex64>,
}

impl ReconstructedEigenvector {
    /// Real and imaginary parts; for r > 0 they span the same real eigenspace
    /// as the conjugate pair (r, n-r).
    pub fn real_parts(&self) -> (Vec<f64>, Vec<f64>) {
        (
            self.values.iter().map(|z| z.re).collect(),
            self.values.iter().map(|z| z.im).collect(),
        )
    }
}

/// y_{(j+h, j)} = f_h ζ^j for odd n: turns a B(ζ^r) eigenvector into an
/// eigenvector of the full token-graph Laplacian with the same eigenvalue.
/// The input must satisfy the eigenpair residual bound 1e-8.
pub fn reconstruct_eigenvector(
    n: usize,
    r: usize,
    f: &[Complex64],
) -> Result<ReconstructedEigenvector> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::InvalidInput(
            "reconstruction needs odd n >= 5".into(),
        ));
    }
    if r >= n {
        return Err(Error::InvalidInput(format!("r={r} out of range for n={n}")));
    }
    let nu = (n - 1) / 2;
    if f.len() != nu {
        return Err(Error::DimensionMismatch(format!(
            "expected f of length {nu}, got {}",
            f.len()
        )));
    }
    let b = base_matrix_herm(&odd_cycle_base(n)?, r)?;
    let bf = b.matvec(f)?;
    let ff: f64 = f.iter().map(|z| z.norm_sqr()).sum();
    if ff == 0.0 {
        return Err(Error::ZeroVector);
    }
    let lambda = f
        .iter()
        .zip(&bf)
        .map(|(x, y)| (x.conj() * y).re)
        .sum::<f64>()
        / ff;
    let resid = f
        .iter()
        .zip(&bf)
        .map(|(x, y)| (y - lambda * x).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let scale = 8.0 * ff.sqrt(); // ||B||_inf <= 8 for these matrices
    if resid > 1e-8 * scale {
        return Err(Error::ResidualTooLarge {
            residual: resid,
            bound: 1e-8 * scale,
        });
    }

    let zeta = Complex64::new(
        (2.0 * PI * r as f64 / n as f64).cos(),
        (2.0 * PI * r as f64 / n as f64).sin(),
    );
    let mut values = vec![Complex64::new(0.0, 0.0); binomial(n, 2)];
    for h in 1..=nu {
        let mut zj = Complex64::new(1.0, 0.0);
        for j in 0..n {
            values[rank_pair(n, j, j + h)] = f[h - 1] * zj;
            zj *= zeta;
        }
    }
    Ok(ReconstructedEigenvector {
        eigenvalue: lambda,
        values,
    })
}

/// Eigenvalues of B(ζ^r) together with unit eigenvectors, for odd n.
pub fn odd_base_eigenpairs(n: usize, r: usize) -> Result<(Spectrum, Vec<Vec<Complex64>>)> {
    eig_herm_full(&base_matrix_herm(&odd_cycle_base(n)?, r)?)
}

/// Closed forms for the path-quotient eigenvalues of F_2(C_n):
/// even n: 8 sin²(rπ/(n-1)), r = 0..ν-1; odd n: 8 cos²(rπ/(n-1)), r = 1..ν.
/// Sorted ascending.
pub fn closed_form_quotient_eigs(n: usize) -> Result<Vec<f64>> {
    if n < 4 {
        return Err(Error::InvalidInput("needs n >= 4".into()));
    }
    let nu = n / 2;
    let mut vals: Vec<f64> = if n.is_multiple_of(2) {
        (0..nu)
            .map(|r| 8.0 * (r as f64 * PI / (n as f64 - 1.0)).sin().powi(2))
            .collect()
    } else {
        (1..=nu)
            .map(|r| 8.0 * (r as f64 * PI / (n as f64 - 1.0)).cos().powi(2))
            .collect()
    };
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Asymptotic closed forms for spec B*(r):
/// odd n, odd r: 4 + 4cos(rπ/n)cos((2k-1)π/(n-1)), k = 1..ν;
/// odd n, even r: 4 + 4cos(rπ/n)cos(2(k-1)π/(n-1)), k = 1..ν;
/// even n, odd r or r = ν even: 4 + 4cos(rπ/n)cos((2k-1)π/(n-1)), k = 1..ν-1.
/// Sorted ascending.
pub fn asymptotic_eigs(n: usize, r: usize) -> Result<Vec<f64>> {
    if n < 4 {
        return Err(Error::InvalidInput("needs n >= 4".into()));
    }
    if r >= n {
        return Err(Error::InvalidInput(format!("r={r} out of range for n={n}")));
    }
    let nu = n / 2;
    let c = (r as f64 * PI / n as f64).cos();
    let mut vals: Vec<f64> = if n % 2 == 1 {
        if r % 2 == 1 {
            (1..=nu)
                .map(|k| 4.0 + 4.0 * c * ((2 * k - 1) as f64 * PI / (n as f64 - 1.0)).cos())
                .collect()
        } else {
            (1..=nu)
                .map(|k| 4.0 + 4.0 * c * (2.0 * (k as f64 - 1.0) * PI / (n as f64 - 1.0)).cos())
                .collect()
        }
    } else if r % 2 == 1 || r == nu {
        (1..nu)
            .map(|k| 4.0 + 4.0 * c * ((2 * k - 1) as f64 * PI / (n as f64 - 1.0)).cos())
            .collect()
    } else {
        return Err(Error::AsymptoticUnsupported { n, r });
    };
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Asymptotic estimate of alpha(F_2(C_n)) next to the assembled exact value.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaEstimate {
    pub estimate: f64,
    pub exact: f64,
}

/// Odd n: 4 + 4cos(π/n)cos((n-2)π/(n-1)); even n: 4 + 4cos(π/n)cos((n-3)π/(n-1)).
/// The exact value is the Fiedler entry of [`f2_cycle_spectrum`].
pub fn alpha_estimates(n: usize) -> Result<AlphaEstimate> {
    if n < 5 {
        return Err(Error::InvalidInput("needs n >= 5".into()));
    }
    let nf = n as f64;
    let estimate = if n % 2 == 1 {
        4.0 + 4.0 * (PI / nf).cos() * ((nf - 2.0) * PI / (nf - 1.0)).cos()
    } else {
        4.0 + 4.0 * (PI / nf).cos() * ((nf - 3.0) * PI / (nf - 1.0)).cos()
    };
    let exact = f2_cycle_spectrum(n)?
        .fiedler()
        .expect("spectrum has at least two values");
    Ok(AlphaEstimate { estimate, exact })
}

/// Result of the Gershgorin lower-bound check on B*(r), odd n.
#[derive(Debug, Clone, Serialize)]
pub struct GershgorinBound {
    pub holds: bool,
    pub bound: f64,
    pub min_eig: f64,
}

/// min spec B*(r) >= 4 sin²(r'π/(2n)) with r' = min(r, n-r); the effective
/// index keeps the row radii |2cos(rπ/n)| honest for r > ν, where B*(r) and
/// B*(n-r) share a spectrum.
pub fn gershgorin_bound_check(n: usize, r: usize) -> Result<GershgorinBound> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::InvalidInput("needs odd n >= 5".into()));
    }
    if r == 0 || r >= n {
        return Err(Error::InvalidInput(format!(
            "needs 1 <= r <= n-1, got r={r}"
        )));
    }
    let rp = r.min(n - r);
    let bound = 4.0 * (rp as f64 * PI / (2.0 * n as f64)).sin().powi(2);
    let min_eig = eig_tridiag_sym(&bstar(n, r)?)?
        .min()
        .expect("nonempty spectrum");
    Ok(GershgorinBound {
        holds: min_eig >= bound - 1e-9,
        bound,
        min_eig,
    })
}

/// One power in the trace identity report.
#[derive(Debug, Clone, Serialize)]
pub struct TraceRow {
    pub l: usize,
    /// Σ_r tr(B*(r)^l), assembled from the per-root eigenvalues.
    pub bstar_total: f64,
    /// tr(L^l) in exact integer arithmetic.
    pub laplacian_trace: i64,
    /// tr(L^l) + ν·4^l.
    pub expected_total: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceIdentityReport {
    pub n: usize,
    pub rows: Vec<TraceRow>,
    pub notes: Vec<String>,
}

impl TraceIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Checks Σ_r tr(B*(r)^l) = tr(L^l) + ν·4^l for l = 0..=lmax on F_2(C_n),
/// even n. Relative tolerance 1e-6.
pub fn trace_identity_check(n: usize, lmax: usize) -> Result<TraceIdentityReport> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidInput(
            "trace identity needs even n >= 4".into(),
        ));
    }
    if lmax > 12 {
        return Err(Error::InvalidInput("lmax must be <= 12".into()));
    }
    let nu = n / 2;
    let detail = f2_cycle_spectrum_detail(n)?;
    let lap = crate::graph::laplacian(&token_graph(
        &crate::graph::build_family(&format!("cycle:{n}"))?,
        2,
    )?);
    let mut rows = Vec::with_capacity(lmax + 1);
    for l in 0..=lmax {
        let bstar_total: f64 = detail
            .per_r
            .iter()
            .flat_map(|p| p.eigs.iter())
            .map(|&v| v.powi(l as i32))
            .sum();
        let trace = lap.trace_power(l);
        let laplacian_trace = i64::try_from(trace)
            .map_err(|_| Error::InvalidInput(format!("tr(L^{l}) overflows i64")))?;
        let expected_total = laplacian_trace as f64 + nu as f64 * 4f64.powi(l as i32);
        let pass = (bstar_total - expected_total).abs() <= 1e-6 * expected_total.abs().max(1.0);
        rows.push(TraceRow {
            l,
            bstar_total,
            laplacian_trace,
            expected_total,
            pass,
        });
    }
    let mut notes = Vec::new();
    if n == 8 && lmax >= 5 {
        notes.push(
            "l=5 total is 89792 (= 85696 + 4*4^5); a circulating transcription reads 9792, \
             dropping the leading digit"
                .to_string(),
        );
    }
    Ok(TraceIdentityReport { n, rows, notes })
}

/// True iff exactly one eigenvalue of B*(r) matches an eigenvalue of C_n
/// within 1e-7, and that match is θ_r (θ_r = θ_{n-r} as a value).
pub fn exactly_one_cycle_eigenvalue(n: usize, r: usize) -> Result<bool> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::InvalidInput("needs odd n >= 5".into()));
    }
    let spec = eig_tridiag_sym(&bstar(n, r)?)?;
    let tol = 1e-7;
    let matches: Vec<f64> = spec
        .values()
        .iter()
        .copied()
        .filter(|&v| (0..n).any(|j| (v - theta(n, j)).abs() <= tol))
        .collect();
    Ok(matches.len() == 1 && (matches[0] - theta(n, r)).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, laplacian};
    use crate::linalg::{eig_herm, eig_sym, gershgorin_left, spectrum_equal};

    #[test]
    fn single_edge_base_matrix() {
        let vg = VoltageGraph::new(2, 2, &[(0, 1, 0)]).unwrap();
        let b = laplacian_base_matrix(&vg);
        let one = b.eval_at_one();
        assert_eq!(one, vec![1, -1, -1, 1]);
        assert!(b.is_conjugate_paired());
    }

    #[test]
    fn odd_base_shape_and_b1() {
        let vg = odd_cycle_base(9).unwrap();
        assert_eq!(vg.vertices(), 4);
        assert_eq!(vg.modulus(), 9);
        let b = laplacian_base_matrix(&vg);
        // B(1) is the path-shaped quotient with (a,b,c) = (2,2,2).
        let one = b.eval_at_one();
        let expect = [[2, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 4, -2], [0, 0, -2, 2]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(one[i * 4 + j], expect[i][j], "({i},{j})");
            }
        }
        assert_eq!(b.row_sums_at_one(), vec![0; 4]);
        // Corner polynomial is 4 - z^nu - z^{-nu}.
        let corner = b.entry(3, 3);
        assert_eq!(corner.get(&0), Some(&4));
        assert_eq!(corner.get(&4), Some(&-1));
        assert_eq!(corner.get(&5), Some(&-1)); // -nu mod 9
        assert!(b.is_conjugate_paired());
    }

    #[test]
    fn odd_base_rejects_even_or_small() {
        assert!(odd_cycle_base(8).is_err());
        assert!(odd_cycle_base(3).is_err());
    }

    #[test]
    fn odd_base_small_instances() {
        // n=5: two base vertices, loop voltage nu=2.
        let vg5 = odd_cycle_base(5).unwrap();
        assert_eq!(vg5.vertices(), 2);
        let loop_edge = vg5.edges().iter().find(|e| e.u == e.v).unwrap();
        assert_eq!(loop_edge.volt, 2);
        // n=9: loop voltage 4.
        let vg9 = odd_cycle_base(9).unwrap();
        let loop_edge = vg9.edges().iter().find(|e| e.u == e.v).unwrap();
        assert_eq!(loop_edge.volt, 4);
        // n=7: lift spectrum equals the dense oracle.
        let vg7 = odd_cycle_base(7).unwrap();
        let s = lift_spectrum(&vg7).unwrap();
        let f2 = token_graph(&build_family("cycle:7").unwrap(), 2).unwrap();
        let brute = eig_sym(&laplacian(&f2).to_dense()).unwrap();
        assert!(spectrum_equal(&s, &brute, 1e-8));
    }

    #[test]
    fn u_partition_cells_are_lift_orbits() {
        // For n = 4r+2 the U-shaped cells are exactly the base-vertex orbits
        // of the lift, in traversal order.
        let n = 10;
        let map = even_4r2_vertex_map(n).unwrap();
        let m = 5;
        let p =
            crate::partitions::f2_cycle_partition(n, crate::partitions::PartitionShape::U).unwrap();
        for (idx, cell) in p.cells.iter().enumerate() {
            let mut orbit: Vec<usize> = (0..m).map(|g| map[idx * m + g]).collect();
            orbit.sort_unstable();
            assert_eq!(&orbit, cell, "base vertex {idx}");
        }
    }

    #[test]
    fn loop_lift_is_cycle() {
        let vg = VoltageGraph::new(1, 5, &[(0, 0, 1)]).unwrap();
        let g = lift_graph(&vg).unwrap();
        assert_eq!(g, build_family("cycle:5").unwrap());
        let s = lift_spectrum(&vg).unwrap();
        let brute = eig_sym(&laplacian(&g).to_dense()).unwrap();
        assert!(spectrum_equal(&s, &brute, 1e-9));
    }

    #[test]
    fn lift_rejects_degenerate() {
        // Zero-voltage loop lifts to self-loops.
        let vg = VoltageGraph::new(1, 4, &[(0, 0, 0)]).unwrap();
        assert!(matches!(lift_graph(&vg), Err(Error::LiftNotSimple(_))));
        // Half-order loop voltage doubles every lift edge.
        let vg = VoltageGraph::new(1, 4, &[(0, 0, 2)]).unwrap();
        assert!(matches!(lift_graph(&vg), Err(Error::LiftNotSimple(_))));
    }

    #[test]
    fn odd_lift_is_f2c9() {
        let vg = odd_cycle_base(9).unwrap();
        let lifted = lift_graph(&vg).unwrap();
        assert_eq!(lifted.n(), 36);
        assert_eq!(lifted.edge_count(), 63);
        let f2 = token_graph(&build_family("cycle:9").unwrap(), 2).unwrap();
        // The canonical vertex map is an isomorphism onto F_2(C_9).
        let map = odd_cycle_vertex_map(9).unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..36).collect::<Vec<_>>());
        for (a, b) in lifted.edges() {
            assert!(f2.has_edge(map[a], map[b]), "edge {a}-{b}");
        }
        let s = lift_spectrum(&vg).unwrap();
        let brute = eig_sym(&laplacian(&f2).to_dense()).unwrap();
        assert!(spectrum_equal(&s, &brute, 1e-8));
    }

    #[test]
    fn even_base_matches_printed_5x5() {
        let vg = even_4r2_base(6).unwrap();
        assert_eq!(vg.vertices(), 5);
        assert_eq!(vg.modulus(), 3);
        let b = laplacian_base_matrix(&vg);
        assert!(b.is_conjugate_paired());
        // Row u_{-1}: (-1, 4, -1-z, 0, -z^{-1}).
        assert_eq!(b.entry(1, 2).get(&0), Some(&-1));
        assert_eq!(b.entry(1, 2).get(&1), Some(&-1));
        assert_eq!(b.entry(1, 4).get(&2), Some(&-1)); // -z^{-1}
        assert_eq!(b.entry(0, 3).get(&1), Some(&-1)); // -z
        assert_eq!(b.entry(4, 1).get(&1), Some(&-1)); // -z
        assert_eq!(b.entry(2, 1).get(&0), Some(&-1));
        assert_eq!(b.entry(2, 1).get(&2), Some(&-1)); // -1-z^{-1}
        let one = b.eval_at_one();
        for i in 0..5 {
            let deg: i64 = (0..5).filter(|&j| j != i).map(|j| -one[i * 5 + j]).sum();
            assert_eq!(one[i * 5 + i], deg);
        }
    }

    #[test]
    fn even_lift_is_f2c10() {
        let vg = even_4r2_base(10).unwrap();
        assert_eq!(vg.vertices(), 9);
        assert_eq!(vg.modulus(), 5);
        let lifted = lift_graph(&vg).unwrap();
        assert_eq!(lifted.n(), 45);
        let f2 = token_graph(&build_family("cycle:10").unwrap(), 2).unwrap();
        let map = even_4r2_vertex_map(10).unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..45).collect::<Vec<_>>());
        for (a, b) in lifted.edges() {
            assert!(f2.has_edge(map[a], map[b]), "edge {a}-{b}");
        }
        let s = lift_spectrum(&vg).unwrap();
        let brute = eig_sym(&laplacian(&f2).to_dense()).unwrap();
        assert!(spectrum_equal(&s, &brute, 1e-8));
    }

    #[test]
    fn even_vertex_map_example() {
        // Copy 1 of u_{-2r+1} is the pair {2,4}.
        let n = 10;
        let map = even_4r2_vertex_map(n).unwrap();
        let m = 5;
        let idx_u = 1; // u_{-2r+1}
        assert_eq!(map[idx_u * m + 1], subset_rank(&[2, 4]).unwrap());
    }

    #[test]
    fn even_base_rejects_wrong_n() {
        assert!(even_4r2_base(8).is_err());
        assert!(even_4r2_base(5).is_err());
    }

    #[test]
    fn table5_lift_values_n6() {
        let vg = even_4r2_base(6).unwrap();
        let s0 = eig_herm(&base_matrix_herm(&vg, 0).unwrap()).unwrap();
        let sqrt5 = 5f64.sqrt();
        let expect0 = Spectrum::new(vec![0.0, 2.0, 5.0 - sqrt5, 4.0, 5.0 + sqrt5], DEFAULT_TOL);
        assert!(spectrum_equal(&s0, &expect0, 1e-10), "{:?}", s0.values());
        let sqrt17 = 17f64.sqrt();
        let expect1 = Spectrum::new(
            vec![1.0, (7.0 - sqrt17) / 2.0, 3.0, 5.0, (7.0 + sqrt17) / 2.0],
            DEFAULT_TOL,
        );
        for r in [1, 2] {
            let s = eig_herm(&base_matrix_herm(&vg, r).unwrap()).unwrap();
            assert!(
                spectrum_equal(&s, &expect1, 1e-10),
                "r={r} {:?}",
                s.values()
            );
        }
    }

    #[test]
    fn bstar_shapes() {
        // n=9, r=0: symmetric, spectrum {0, 2-sqrt2 scaled, ...} = 8cos^2 forms.
        let t = bstar(9, 0).unwrap();
        assert!(t.is_symmetric());
        let s = eig_tridiag_sym(&t).unwrap();
        let expect = Spectrum::new(vec![0.0, 1.171572876, 4.0, 6.828427124], DEFAULT_TOL);
        assert!(spectrum_equal(&s, &expect, 1e-8), "{:?}", s.values());

        // n=8, odd r: last row collapses to (0,...,0,4).
        let t = bstar(8, 3).unwrap();
        assert!(t.sub.last().unwrap().abs() < 1e-12);
        assert_eq!(*t.diag.last().unwrap(), 4.0);

        // n=8, r=4: diagonal.
        let t = bstar(8, 4).unwrap();
        assert_eq!(t.diag, vec![2.0, 4.0, 4.0, 4.0]);
        assert!(t.sub.iter().chain(&t.sup).all(|&x| x.abs() < 1e-12));

        // n=8, r=2: corner bands (4c, 2c) symmetrize to 2*sqrt(2)*c.
        let t = bstar(8, 2).unwrap();
        let c = (PI / 4.0).cos();
        let s = crate::linalg::symmetrize_tridiag(&t).unwrap();
        assert!((s.sub.last().unwrap() - 2.0 * 2f64.sqrt() * c).abs() < 1e-12);

        assert!(bstar(9, 9).is_err());
        assert!(bstar(3, 0).is_err());
    }

    #[test]
    fn bstar_matches_herm_base_odd() {
        for n in [7, 9] {
            let vg = odd_cycle_base(n).unwrap();
            for r in 0..n {
                let via_herm = eig_herm(&base_matrix_herm(&vg, r).unwrap()).unwrap();
                let via_tri = eig_tridiag_sym(&bstar(n, r).unwrap()).unwrap();
                assert!(spectrum_equal(&via_herm, &via_tri, 1e-9), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn overlift_matrix_is_bstar_similar() {
        let n = 8;
        let b = overlift_base_matrix(n).unwrap();
        assert!(!b.is_conjugate_paired());
        for r in 0..n {
            let z = b.eval_at_root(r);
            let t = bstar(n, r).unwrap();
            let nu = n / 2;
            // Same diagonal and same sub*sup products row by row.
            for i in 0..nu {
                assert!((z[i * nu + i].im).abs() < 1e-12);
                assert!((z[i * nu + i].re - t.diag[i]).abs() < 1e-9, "r={r} i={i}");
            }
            for i in 0..nu - 1 {
                let prod = z[i * nu + i + 1] * z[(i + 1) * nu + i];
                assert!(prod.im.abs() < 1e-9);
                assert!(
                    (prod.re - t.sub[i] * t.sup[i]).abs() < 1e-9,
                    "r={r} band {i}"
                );
            }
        }
    }

    #[test]
    fn spectrum_n12_matches_dense_oracle() {
        let s = f2_cycle_spectrum(12).unwrap();
        let f2 = token_graph(&build_family("cycle:12").unwrap(), 2).unwrap();
        let brute = eig_sym(&laplacian(&f2).to_dense()).unwrap();
        assert!(spectrum_equal(&s, &brute, 1e-8));
    }

    #[test]
    fn overlift_detail_n8() {
        let d = f2_cycle_spectrum_detail(8).unwrap();
        assert_eq!(d.method, "overlift");
        assert_eq!(d.lambda_removed.len(), 4);
        assert!(d.lambda_removed.iter().all(|&v| (v - 4.0).abs() <= 1e-6));
        assert_eq!(d.spectrum.len(), 28);
        // At least nu values equal to 4 remain available before subtraction.
        let fours = d
            .per_r
            .iter()
            .flat_map(|p| p.eigs.iter())
            .filter(|&&v| (v - 4.0).abs() <= 1e-8)
            .count();
        assert!(fours >= 4, "{fours}");
    }

    #[test]
    fn odd_detail_has_no_removals() {
        let d = f2_cycle_spectrum_detail(9).unwrap();
        assert_eq!(d.method, "lift");
        assert!(d.lambda_removed.is_empty());
        assert_eq!(d.spectrum.len(), 36);
    }

    #[test]
    fn conjugate_symmetry_of_bstar() {
        for n in [9, 12, 15] {
            for r in 1..n {
                let a = bstar_spectrum(n, r).unwrap();
                let b = bstar_spectrum(n, n - r).unwrap();
                for (x, y) in a.iter().zip(&b) {
                    assert!((x - y).abs() < 1e-9, "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn min_over_roots_is_alpha_at_r1() {
        for n in 5..=24 {
            let at_r1 = bstar_spectrum(n, 1).unwrap()[0];
            let overall = (1..n)
                .map(|r| bstar_spectrum(n, r).unwrap()[0])
                .fold(f64::INFINITY, f64::min);
            assert!((at_r1 - overall).abs() <= 1e-9, "n={n}");
            let alpha = f2_cycle_spectrum(n).unwrap().fiedler().unwrap();
            assert!((at_r1 - alpha).abs() <= 1e-8, "n={n}: {at_r1} vs {alpha}");
        }
    }

    #[test]
    fn closed_forms_examples() {
        let v = closed_form_quotient_eigs(8).unwrap();
        let expect = [0.0, 1.506040792, 4.890083735, 7.603875471];
        for (a, b) in v.iter().zip(expect) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        let v9 = closed_form_quotient_eigs(9).unwrap();
        assert!(v9[0].abs() < 1e-12);
        assert!((v9.last().unwrap() - 8.0 * (PI / 8.0).cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_cases_and_r0() {
        // r=0 specialization equals 8cos^2((k-1)pi/(n-1)).
        let n = 11;
        let v = asymptotic_eigs(n, 0).unwrap();
        let mut expect: Vec<f64> = (1..=n / 2)
            .map(|k| 8.0 * ((k as f64 - 1.0) * PI / (n as f64 - 1.0)).cos().powi(2))
            .collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in v.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(asymptotic_eigs(12, 2).is_err());
        assert!(asymptotic_eigs(12, 6).is_ok());
        assert!(asymptotic_eigs(12, 3).is_ok());
    }

    #[test]
    fn asymptotics_tighten_with_n() {
        let dev = |n: usize| -> f64 {
            let a = asymptotic_eigs(n, 1).unwrap();
            let s = eig_tridiag_sym(&bstar(n, 1).unwrap()).unwrap();
            a.iter()
                .zip(s.values())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        };
        assert!(dev(5) > dev(9), "error shrinks from n=5 to n=9");
        assert!(dev(9) > dev(15), "error shrinks with n");
    }

    #[test]
    fn alpha_estimate_n9_exact_is_cycle_alpha() {
        let est = alpha_estimates(9).unwrap();
        assert!((est.exact - theta(9, 1)).abs() < 1e-8);
        assert!(alpha_estimates(4).is_err());
    }

    #[test]
    fn alpha_estimate_converges_by_n101() {
        let est = alpha_estimates(101).unwrap();
        assert!((est.estimate - est.exact).abs() / est.exact < 0.02);
    }

    #[test]
    fn gershgorin_examples_n9() {
        let g1 = gershgorin_bound_check(9, 1).unwrap();
        assert!(g1.holds);
        assert!((g1.bound - 0.1206147584).abs() < 1e-9);
        let g2 = gershgorin_bound_check(9, 2).unwrap();
        assert!(g2.holds);
        assert!((g2.bound - 0.4679111138).abs() < 1e-9);
        assert!((g2.bound - theta(9, 1)).abs() < 1e-9);
        assert!(gershgorin_bound_check(9, 0).is_err());
    }

    #[test]
    fn gershgorin_endpoint_classes_table_row() {
        // B*(1) for n=9: l1 = alpha(P_9), l2 = 2*l1, l3 = 4.
        let g = gershgorin_left(&bstar(9, 1).unwrap());
        assert!((g.l1 - 0.1206147584).abs() < 1e-9);
        assert!((g.l2.unwrap() - 0.24122951686).abs() < 1e-9);
        assert!((g.l3 - 4.0).abs() < 1e-12);
        // B*(0): all endpoints 0.
        let g0 = gershgorin_left(&bstar(9, 0).unwrap());
        assert!(g0.per_row.iter().all(|&x| x.abs() < 1e-12));
    }

    #[test]
    fn trace_identity_n8_low_powers() {
        let rep = trace_identity_check(8, 3).unwrap();
        assert!(rep.all_pass());
        let expect_totals = [32.0, 112.0, 512.0, 2656.0];
        let expect_traces = [28, 96, 448, 2400];
        for (row, (t, tr)) in rep.rows.iter().zip(expect_totals.iter().zip(expect_traces)) {
            assert!((row.bstar_total - t).abs() < 1e-6 * t);
            assert_eq!(row.laplacian_trace, tr);
        }
        // tr(L) is twice the edge count.
        let f2 = token_graph(&build_family("cycle:8").unwrap(), 2).unwrap();
        assert_eq!(rep.rows[1].laplacian_trace, 2 * f2.edge_count() as i64);
        assert!(trace_identity_check(9, 3).is_err());
        assert!(trace_identity_check(8, 13).is_err());
    }

    #[test]
    fn exactly_one_examples() {
        // n=9, r=3 matches theta_3 = 3; r=0 matches theta_0 = 0.
        assert!(exactly_one_cycle_eigenvalue(9, 3).unwrap());
        assert!(exactly_one_cycle_eigenvalue(9, 0).unwrap());
        for r in 0..11 {
            assert!(exactly_one_cycle_eigenvalue(11, r).unwrap(), "r={r}");
        }
    }

    #[test]
    fn reconstruction_kernel_vector() {
        // r=0, lambda=0: y is constant on distance classes and L y = 0.
        let (s, vecs) = odd_base_eigenpairs(9, 0).unwrap();
        assert!(s.values()[0].abs() < 1e-10);
        let y = reconstruct_eigenvector(9, 0, &vecs[0]).unwrap();
        assert!(y.eigenvalue.abs() < 1e-9);
        let f2 = token_graph(&build_family("cycle:9").unwrap(), 2).unwrap();
        let l = laplacian(&f2).to_dense();
        let (re, im) = y.real_parts();
        for part in [re, im] {
            let lv = l.matvec(&part).unwrap();
            assert!(lv.iter().all(|v| v.abs() < 1e-9));
        }
    }

    #[test]
    fn reconstruction_alpha_vector_rayleigh() {
        let (s, vecs) = odd_base_eigenpairs(9, 1).unwrap();
        let alpha = theta(9, 1);
        let idx = s
            .values()
            .iter()
            .position(|&v| (v - alpha).abs() < 1e-8)
            .expect("alpha eigenvalue present");
        let y = reconstruct_eigenvector(9, 1, &vecs[idx]).unwrap();
        let f2 = token_graph(&build_family("cycle:9").unwrap(), 2).unwrap();
        let l = laplacian(&f2).to_dense();
        let (re, _) = y.real_parts();
        let q = crate::linalg::rayleigh_quotient(&l, &re).unwrap();
        assert!((q - alpha).abs() < 1e-7, "{q}");
    }

    #[test]
    fn reconstruction_rejects_non_eigenvector() {
        let nu = 4;
        let junk = vec![Complex64::new(1.0, 0.0); nu];
        assert!(matches!(
            reconstruct_eigenvector(9, 1, &junk),
            Err(Error::ResidualTooLarge { .. })
        ));
    }
}
