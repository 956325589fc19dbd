//! Undirected simple graphs, named family constructors, and Laplacians.
//!
//! Vertices are dense 0-based indices. Families define canonical labelings so
//! downstream spectra and partitions are deterministic:
//!
//! - `cycle:n` — vertex i adjacent to i±1 mod n.
//! - `path:n` — vertices 0..n-1 along the path.
//! - `complete:n`, `star:n` (center 0), `complete_multipartite:n1,...,nr`
//!   (consecutive blocks).
//! - `odd:r` — vertices are the (r-1)-subsets of a (2r-1)-set in colex order,
//!   adjacent when disjoint. `odd:3` is the Petersen graph, also reachable as
//!   `petersen`.
//! - `hypercube:d` — vertices are d-bit integers, adjacency = Hamming distance 1.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::linalg::DenseMat;
use crate::token::subset_unrank;

/// Undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Build from an edge list, rejecting loops, duplicates, and bad indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n();
        if a >= n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
        if b >= n {
            return Err(Error::IndexOutOfRange { index: b, n });
        }
        if a == b {
            return Err(Error::EdgeList(format!("loop at vertex {a}")));
        }
        if self.adj[a].contains(&b) {
            return Err(Error::EdgeList(format!("duplicate edge {a} {b}")));
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (i, j) with i < j, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Connectivity via union-find.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for (i, j) in self.edges() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
                components -= 1;
            }
        }
        components == 1
    }
}

/// Symmetric integer matrix; Laplacians live here so `L = D - A` stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntSymMatrix {
    pub fn zeros(n: usize) -> Self {
        IntSymMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.data[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn to_dense(&self) -> DenseMat {
        DenseMat::from_fn(self.n, |i, j| self.get(i, j) as f64)
    }

    /// Remove row and column `i`, preserving the relative order of the rest.
    pub fn delete_rowcol(&self, i: usize) -> Result<IntSymMatrix> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let m = self.n - 1;
        let mut out = IntSymMatrix::zeros(m);
        let map = |v: usize| if v < i { v } else { v + 1 };
        for r in 0..m {
            for c in 0..m {
                out.data[r * m + c] = self.get(map(r), map(c));
            }
        }
        Ok(out)
    }

    /// tr(M^l) in exact integer arithmetic.
    pub fn trace_power(&self, l: usize) -> i128 {
        let n = self.n;
        if l == 0 {
            return n as i128;
        }
        let base: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        let mut cur = base.clone();
        for _ in 1..l {
            let mut next = vec![0i128; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = cur[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i * n + j] += a * base[k * n + j];
                    }
                }
            }
            cur = next;
        }
        (0..n).map(|i| cur[i * n + i]).sum()
    }
}

/// Laplacian L = D - A, integer exact.
pub fn laplacian(g: &Graph) -> IntSymMatrix {
    let n = g.n();
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n {
        m.set_sym(i, i, g.degree(i) as i64);
        for &j in g.neighbors(i) {
            m.set_sym(i, j, -1);
        }
    }
    m
}

/// Remove vertex `i`; remaining indices are compacted preserving order.
pub fn delete_vertex(g: &Graph, i: usize) -> Result<Graph> {
    let n = g.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let map = |v: usize| if v < i { v } else { v - 1 };
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if a != i && b != i {
            edges.push((map(a), map(b)));
        }
    }
    Graph::from_edges(n - 1, &edges)
}

/// Two-coloring if the graph is bipartite, else `None`.
///
/// Deterministic: BFS from the lowest-index vertex of each component, which
/// gets color 0.
pub fn bipartite_classes(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn parse_usize(s: &str, spec: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::InvalidFamily(spec.to_string()))
}

/// Build a named graph family from a descriptor string.
pub fn build_family(spec: &str) -> Result<Graph> {
    let bad = || Error::InvalidFamily(spec.to_string());
    if spec == "petersen" {
        return odd_graph(3);
    }
    let (name, arg) = spec.split_once(':').ok_or_else(bad)?;
    match name {
        "cycle" => {
            let n = parse_usize(arg, spec)?;
            if n < 3 {
                return Err(bad());
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        "path" => {
            let n = parse_usize(arg, spec)?;
            if n < 1 {
                return Err(bad());
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        "complete" => {
            let n = parse_usize(arg, spec)?;
            if n < 1 {
                return Err(bad());
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(n, &edges)
        }
        "star" => {
            let n = parse_usize(arg, spec)?;
            if n < 2 {
                return Err(bad());
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        "complete_multipartite" => {
            let parts: Vec<usize> = arg
                .split(',')
                .map(|p| parse_usize(p, spec))
                .collect::<Result<_>>()?;
            if parts.is_empty() || parts.contains(&0) {
                return Err(bad());
            }
            let n: usize = parts.iter().sum();
            let mut block = Vec::with_capacity(n);
            for (bi, &p) in parts.iter().enumerate() {
                block.extend(std::iter::repeat_n(bi, p));
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if block[i] != block[j] {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        "odd" => {
            let r = parse_usize(arg, spec)?;
            if r < 2 {
                return Err(bad());
            }
            odd_graph(r)
        }
        "hypercube" => {
            let d = parse_usize(arg, spec)?;
            if !(1..=20).contains(&d) {
                return Err(bad());
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for i in 0..n {
                for b in 0..d {
                    let j = i ^ (1 << b);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        _ => Err(bad()),
    }
}

/// Odd graph O_r: (r-1)-subsets of [2r-1] in colex order, adjacent when disjoint.
fn odd_graph(r: usize) -> Result<Graph> {
    let ground = 2 * r - 1;
    let k = r - 1;
    let n = crate::token::binomial(ground, k);
    let subsets: Vec<Vec<usize>> = (0..n)
        .map(|rank| subset_unrank(rank, ground, k).expect("rank in range"))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Write the edge-list text format: first line `n m`, then `m` lines `i j`
/// with i < j, LF newlines.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    let edges = g.edges();
    writeln!(w, "{} {}", g.n(), edges.len())?;
    for (i, j) in edges {
        writeln!(w, "{i} {j}")?;
    }
    Ok(())
}

/// Read the edge-list text format; rejects loops, duplicates, and count
/// mismatches.
pub fn read_edge_list<R: BufRead>(r: R) -> Result<Graph> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("empty input".into()))??;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header `{header}`")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header `{header}`")))?;
    if it.next().is_some() {
        return Err(Error::EdgeList(format!("bad header `{header}`")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line `{line}`")))?;
        let b: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line `{line}`")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("bad edge line `{line}`")));
        }
        if a >= b {
            return Err(Error::EdgeList(format!("edge `{line}` must have i < j")));
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}
