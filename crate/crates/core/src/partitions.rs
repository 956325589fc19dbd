//! Regular (equitable) partitions, exact quotient Laplacians, and the
//! path-shaped / U-shaped partitions of F_2(C_n).
//!
//! Quotient arithmetic is exact: LS = SQ_L is an integer identity, so the
//! intersection numbers are computed in integers and the quotient is stored
//! as an integer matrix (regularity makes every entry integral). Floating
//! point enters only at eigensolve time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eig_sym, DenseMat, Spectrum};
use crate::token::{binomial, subset_rank, token_graph};

/// Disjoint, covering, nonempty vertex cells.
#[derive(Debug, Clone, Serialize)]
pub struct Partition {
    pub cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates cells against a graph on `n` vertices; sorts each cell.
    pub fn new(n: usize, mut cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        if cells.iter().any(Vec::is_empty) {
            return Err(Error::MalformedPartition("empty cell".into()));
        }
        for cell in &mut cells {
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} out of range"
                    )));
                }
                if seen[v] {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} in two cells"
                    )));
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::MalformedPartition("cells do not cover V".into()));
        }
        Ok(Partition { cells })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Characteristic matrix entry S[v][c].
    pub fn indicator(&self, v: usize, c: usize) -> i64 {
        i64::from(self.cells[c].binary_search(&v).is_ok())
    }

    fn cell_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (ci, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = ci;
            }
        }
        out
    }
}

/// Outcome of the regularity test.
#[derive(Debug, Clone)]
pub enum Regularity {
    /// Regular, with the intersection numbers b[i][j].
    Regular { b: Vec<Vec<i64>> },
    /// Witness (u, w, j): u and w share a cell but count different numbers of
    /// neighbors in cell j.
    Irregular { witness: (usize, usize, usize) },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular { .. })
    }
}

/// Integer-exact regularity test: every vertex of cell i must have the same
/// number of neighbors in cell j, for all i, j.
pub fn is_regular(g: &Graph, p: &Partition) -> Result<Regularity> {
    let n = g.n();
    let covered: usize = p.cells.iter().map(Vec::len).sum();
    if covered != n {
        return Err(Error::MalformedPartition(format!(
            "partition covers {covered} of {n} vertices"
        )));
    }
    let cell_of = p.cell_of(n);
    let r = p.len();
    let mut b = Vec::with_capacity(r);
    for cell in &p.cells {
        let first = cell[0];
        let mut counts = vec![0i64; r];
        for &u in g.neighbors(first) {
            counts[cell_of[u]] += 1;
        }
        for &v in &cell[1..] {
            let mut vc = vec![0i64; r];
            for &u in g.neighbors(v) {
                vc[cell_of[u]] += 1;
            }
            if vc != counts {
                let j = (0..r).find(|&j| vc[j] != counts[j]).unwrap();
                return Ok(Regularity::Irregular {
                    witness: (first, v, j),
                });
            }
        }
        b.push(counts);
    }
    Ok(Regularity::Regular { b })
}

/// Exact quotient Laplacian (SᵀS)⁻¹SᵀLS of a regular partition.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<i64>>,
    pub cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn to_dense(&self) -> DenseMat {
        DenseMat::from_fn(self.r(), |i, j| self.entries[i][j] as f64)
    }

    /// Eigenvalues via the exact similarity D^{1/2} Q D^{-1/2} (D = cell
    /// sizes), which is symmetric for a Laplacian quotient.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let r = self.r();
        let sqrt: Vec<f64> = self.cell_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
        let sym = DenseMat::from_fn(r, |i, j| self.entries[i][j] as f64 * sqrt[i] / sqrt[j]);
        eig_sym(&sym)
    }
}

/// Q_L = (SᵀS)⁻¹SᵀLS for a regular partition; errors with a witness when the
/// partition is not regular.
pub fn quotient_laplacian(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    match is_regular(g, p)? {
        Regularity::Irregular { witness: (u, w, j) } => {
            let cell_of = p.cell_of(g.n());
            let count =
                |v: usize| g.neighbors(v).iter().filter(|&&x| cell_of[x] == j).count() as i64;
            Err(Error::NotRegular {
                u,
                w,
                cell_of_u: cell_of[u],
                cell: j,
                cu: count(u),
                cw: count(w),
            })
        }
        Regularity::Regular { b } => {
            let r = p.len();
            let mut entries = vec![vec![0i64; r]; r];
            for i in 0..r {
                let deg: i64 = b[i].iter().sum();
                for j in 0..r {
                    entries[i][j] = if i == j { deg - b[i][i] } else { -b[i][j] };
                }
            }
            Ok(QuotientMatrix {
                entries,
                cell_sizes: p.cell_sizes(),
            })
        }
    }
}

/// Which F_2(C_n) partition to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionShape {
    /// Cells by cycle distance d = 1..⌊n/2⌋.
    Path,
    /// Even n only: distance cells d < n/2 split by the parity of the smaller
    /// endpoint along the canonical traversal, walked
    /// d=1..ν-1 (even), d=ν, d=ν-1..1 (odd). For n = 4r+2 these cells are
    /// exactly the copies of the lift base path.
    U,
}

/// Partition of the colex-ranked vertex set of F_2(C_n).
///
/// The result is validated against F_2(C_n) and guaranteed regular.
pub fn f2_cycle_partition(n: usize, shape: PartitionShape) -> Result<Partition> {
    if n < 4 {
        return Err(Error::InvalidInput(
            "f2 cycle partition needs n >= 4".into(),
        ));
    }
    if shape == PartitionShape::U && !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(
            "U-shaped partition needs even n".into(),
        ));
    }
    let nu = n / 2;
    let rank_pair = |a: usize, b: usize| -> usize {
        let (a, b) = (a % n, b % n);
        let pair = if a < b { [a, b] } else { [b, a] };
        subset_rank(&pair).expect("valid pair")
    };
    let cells: Vec<Vec<usize>> = match shape {
        PartitionShape::Path => (1..=nu)
            .map(|d| {
                let top = if n.is_multiple_of(2) && d == nu {
                    nu
                } else {
                    n
                };
                (0..top).map(|a| rank_pair(a, a + d)).collect()
            })
            .collect(),
        PartitionShape::U => {
            let mut cells = Vec::with_capacity(2 * nu - 1);
            for d in 1..nu {
                cells.push((0..n).step_by(2).map(|a| rank_pair(a, a + d)).collect());
            }
            cells.push((0..nu).map(|a| rank_pair(a, a + nu)).collect());
            for d in (1..nu).rev() {
                cells.push((1..n).step_by(2).map(|a| rank_pair(a, a + d)).collect());
            }
            cells
        }
    };
    let size = binomial(n, 2);
    let p = Partition::new(size, cells)?;
    let f2 = token_graph(&crate::graph::build_family(&format!("cycle:{n}"))?, 2)?;
    match is_regular(&f2, &p)? {
        Regularity::Regular { .. } => Ok(p),
        Regularity::Irregular { witness } => Err(Error::MalformedPartition(format!(
            "constructed partition is not regular (witness {witness:?})"
        ))),
    }
}
