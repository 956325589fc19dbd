//! k-token graphs, the binomial matrix, eigenvector transport, and algebraic
//! connectivity.
//!
//! Vertices of F_k(G) are the k-subsets of V(G) in colexicographic order:
//! S < T iff max(S △ T) ∈ T. Colex rank is Σ C(s_i, i+1) over the sorted
//! subset, so ranking costs O(k) and never needs lookup tables.

use crate::error::{Error, Result};
use crate::graph::{delete_vertex, laplacian, Graph};
use crate::linalg::{eig_sym, DenseMat};
use crate::report::{Check, ConnectivityReport};

/// Default cap on C(n,k) for the dense-oracle verification paths.
pub const DEFAULT_CAP: usize = 5000;

/// Binomial coefficient, exact; saturates are not needed in the ranges used.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc as usize
}

/// Colex rank of a strictly increasing k-subset.
pub fn subset_rank(subset: &[usize]) -> Result<usize> {
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "subset must be strictly increasing".into(),
        ));
    }
    Ok(subset
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s, i + 1))
        .sum())
}

/// Inverse of [`subset_rank`] for k-subsets of 0..n-1.
pub fn subset_unrank(rank: usize, n: usize, k: usize) -> Result<Vec<usize>> {
    if k > n || rank >= binomial(n, k) {
        return Err(Error::InvalidInput(format!(
            "rank {rank} out of range for C({n},{k})"
        )));
    }
    let mut rem = rank;
    let mut out = vec![0usize; k];
    let mut upper = n;
    for i in (0..k).rev() {
        // Largest c < upper with C(c, i+1) <= rem.
        let mut c = i;
        for cand in (i..upper).rev() {
            if binomial(cand, i + 1) <= rem {
                c = cand;
                break;
            }
        }
        out[i] = c;
        rem -= binomial(c, i + 1);
        upper = c;
    }
    debug_assert_eq!(rem, 0);
    Ok(out)
}

/// The k-token graph F_k(G): vertices are colex-ranked k-subsets, adjacent
/// when their symmetric difference is an edge of `g`.
pub fn token_graph(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    if k < 1 || k >= n {
        return Err(Error::InvalidInput(format!(
            "token number k={k} must satisfy 1 <= k <= n-1 (n={n})"
        )));
    }
    let size = binomial(n, k);
    let mut edges = Vec::new();
    let mut subset = (0..k).collect::<Vec<usize>>();
    for rank in 0..size {
        debug_assert_eq!(subset_rank(&subset).unwrap(), rank);
        let inside = |v: usize| subset.binary_search(&v).is_ok();
        for (pos, &a) in subset.iter().enumerate() {
            for &b in g.neighbors(a) {
                if inside(b) {
                    continue;
                }
                // Move the token on a to b; only emit each edge once.
                let mut other = subset.clone();
                other.remove(pos);
                let ins = other.partition_point(|&x| x < b);
                other.insert(ins, b);
                let orank = subset_rank(&other)?;
                if rank < orank {
                    edges.push((rank, orank));
                }
            }
        }
        next_colex(&mut subset, k);
    }
    Graph::from_edges(size, &edges)
}

/// Advance a sorted k-subset to its colex successor.
fn next_colex(subset: &mut [usize], k: usize) {
    for i in 0..k {
        if i + 1 < k && subset[i] + 1 == subset[i + 1] {
            subset[i] = i;
        } else {
            subset[i] += 1;
            return;
        }
    }
}

/// The C(n,k) × n binomial matrix: row i is the characteristic vector of the
/// rank-i subset.
#[derive(Debug, Clone)]
pub struct BinomialMatrix {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

/// Rows in colex order, consistent with [`subset_rank`].
pub fn binomial_matrix(n: usize, k: usize) -> Result<BinomialMatrix> {
    if k < 1 || k > n {
        return Err(Error::InvalidInput(format!(
            "binomial matrix needs 1 <= k <= n, got n={n} k={k}"
        )));
    }
    let rows = binomial(n, k);
    let subsets = (0..rows)
        .map(|r| subset_unrank(r, n, k))
        .collect::<Result<_>>()?;
    Ok(BinomialMatrix { n, k, subsets })
}

impl BinomialMatrix {
    pub fn rows(&self) -> usize {
        self.subsets.len()
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.subsets[i].binary_search(&j).is_ok())
    }

    pub fn subset(&self, i: usize) -> &[usize] {
        &self.subsets[i]
    }

    /// Bv: transports an n-vector up to F_k.
    pub fn lift_eigvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "expected length {}, got {}",
                self.n,
                v.len()
            )));
        }
        Ok(self
            .subsets
            .iter()
            .map(|s| s.iter().map(|&j| v[j]).sum())
            .collect())
    }

    /// Bᵀu: projects a C(n,k)-vector down to the base graph.
    pub fn project_eigvec(&self, u: &[f64]) -> Result<Vec<f64>> {
        if u.len() != self.rows() {
            return Err(Error::DimensionMismatch(format!(
                "expected length {}, got {}",
                self.rows(),
                u.len()
            )));
        }
        let mut out = vec![0.0; self.n];
        for (row, s) in self.subsets.iter().enumerate() {
            for &j in s {
                out[j] += u[row];
            }
        }
        Ok(out)
    }
}

/// Second-smallest Laplacian eigenvalue (position 2 of the ascending
/// spectrum). Zero for disconnected graphs.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::InvalidInput(
            "algebraic connectivity needs n >= 2".into(),
        ));
    }
    let s = eig_sym(&laplacian(g).to_dense())?;
    Ok(s.fiedler().expect("n >= 2"))
}

/// Kirkland's vertex-deletion ratio alpha(G\i) / alpha(G).
pub fn kirkland_kappa(g: &Graph, i: usize) -> Result<f64> {
    if g.n() < 3 {
        return Err(Error::InvalidInput("kappa needs n >= 3".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let deleted = delete_vertex(g, i)?;
    if !deleted.is_connected() {
        return Err(Error::Disconnected);
    }
    let denom = algebraic_connectivity(g)?;
    if denom < 1e-12 {
        return Err(Error::VanishingConnectivity(denom));
    }
    Ok(algebraic_connectivity(&deleted)? / denom)
}

/// alpha with the disconnected-input convention: 0 plus a warning note
/// instead of an error.
fn alpha_with_convention(g: &Graph, what: &str, warnings: &mut Vec<String>) -> Result<f64> {
    if !g.is_connected() {
        warnings.push(format!("{what} is disconnected; using alpha = 0"));
        return Ok(0.0);
    }
    algebraic_connectivity(g)
}

/// True when the graph is a single cycle (connected and 2-regular).
fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Runs the connectivity relations as named checks:
/// the non-increasing chain alpha(G) >= alpha(F_2) >= ... >= alpha(F_k),
/// the known equality alpha(F_k(G)) = alpha(G), and for cycles the
/// path lower bound alpha(F_k(C_n)) >= (k/(k-1)) alpha(P_{n-1}).
/// The xi(G-) quantity is reported informationally.
pub fn verify_connectivity_relations(
    g: &Graph,
    label: &str,
    k: usize,
    cap: usize,
    tol: f64,
) -> Result<ConnectivityReport> {
    let n = g.n();
    if k < 2 || k >= n {
        return Err(Error::InvalidInput(format!(
            "verification needs 2 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    for j in 2..=k {
        let size = binomial(n, j);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
    }

    let mut warnings = Vec::new();
    let mut checks = Vec::new();

    let mut alphas = vec![alpha_with_convention(g, "input graph", &mut warnings)?];
    for j in 2..=k {
        let fj = token_graph(g, j)?;
        alphas.push(alpha_with_convention(
            &fj,
            &format!("F_{j}"),
            &mut warnings,
        )?);
    }
    for j in 1..alphas.len() {
        checks.push(Check::at_least(
            format!("alpha_chain: alpha(F_{}) >= alpha(F_{})", j, j + 1),
            alphas[j - 1],
            alphas[j],
            tol,
        ));
    }
    checks.push(Check::equality(
        format!("alpha_equality: alpha(F_{k}) = alpha(G)"),
        *alphas.last().unwrap(),
        alphas[0],
        tol,
    ));

    if is_cycle(g) {
        let path = crate::graph::build_family(&format!("path:{}", n - 1))?;
        let bound = k as f64 / (k as f64 - 1.0) * algebraic_connectivity(&path)?;
        checks.push(Check::at_least(
            format!(
                "cycle_path_bound: alpha(F_{k}) >= (k/(k-1)) alpha(P_{})",
                n - 1
            ),
            *alphas.last().unwrap(),
            bound,
            tol,
        ));
    }

    // xi(G-) = min over i of alpha(F_{k-1}(G \ i)); informational only, since
    // the bound it feeds is conditional on a strict inequality that the
    // equality above rules out.
    let mut xi = f64::INFINITY;
    for i in 0..n {
        let deleted = delete_vertex(g, i)?;
        let sub = if k - 1 == 1 {
            deleted
        } else {
            token_graph(&deleted, k - 1)?
        };
        xi = xi.min(alpha_with_convention(
            &sub,
            &format!("F_{}(G\\{})", k - 1, i),
            &mut warnings,
        )?);
    }
    checks.push(Check {
        name: format!("xi_informational: min_i alpha(F_{}(G\\i))", k - 1),
        pass: true,
        lhs: xi,
        rhs: xi,
        tol,
    });

    Ok(ConnectivityReport {
        graph: label.to_string(),
        k,
        checks,
        warnings,
    })
}

/// Laplacian of F_k(G) as a dense matrix; the brute-force oracle path.
pub fn token_laplacian_dense(g: &Graph, k: usize) -> Result<DenseMat> {
    Ok(laplacian(&token_graph(g, k)?).to_dense())
}
