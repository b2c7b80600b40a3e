//! Simple undirected graphs on vertices `0..n`, their shortest-path
//! metric, and the structural primitives (girth, blocks, leaves) the
//! rest of the crate is built on.
//!
//! Graphs are immutable after construction: edges are stored as sorted
//! `(min, max)` pairs and mirrored into ascending adjacency lists, so
//! every iteration order in the crate is deterministic.

use std::collections::VecDeque;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

/// Errors from graph construction and the metric operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected ({reached} of {n} vertices reachable from vertex 0)")]
    Disconnected { reached: usize, n: usize },
}

/// Errors from the "n m" edge-list text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple, finite, undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse,
    /// endpoint order is irrelevant; self-loops and out-of-range
    /// endpoints are rejected, as is `n = 0`.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_reach_count(0) == self.n
    }

    /// Connected and `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n && self.is_connected()
    }

    fn bfs_reach_count(&self, start: usize) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    /// Hop distances from `start` to every vertex (`u32::MAX` marks
    /// unreachable ones).
    pub(crate) fn bfs_distances(&self, start: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs shortest-path matrix via one BFS per vertex.
    /// Fails on disconnected input, which invalidates every metric
    /// invariant downstream.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix, GraphError> {
        DistanceMatrix::from_graph(self)
    }

    /// Length of a shortest cycle, or `None` for acyclic graphs.
    ///
    /// One BFS per root; for each non-tree edge `(x, y)` seen from root
    /// `r` the closed walk `r..x, xy, y..r` has length
    /// `d(r,x) + d(r,y) + 1`. The minimum over all roots is exact
    /// because a BFS rooted on a shortest cycle measures it precisely.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            for &(x, y) in &self.edges {
                if dist[x] == u32::MAX || dist[y] == u32::MAX {
                    continue;
                }
                if parent[x] == y || parent[y] == x {
                    continue;
                }
                let len = dist[x] as usize + dist[y] as usize + 1;
                if best.is_none_or(|b| len < b) {
                    best = Some(len);
                }
            }
        }
        best
    }

    /// Biconnected components as vertex sets, sorted by their vertex
    /// lists for determinism. Each edge lies in exactly one block;
    /// cut-vertices are exactly the vertices appearing in two or more
    /// blocks. A one-vertex graph has the single block `{0}`.
    pub fn blocks(&self) -> Result<Vec<VertexSet>, GraphError> {
        let reached = self.bfs_reach_count(0);
        if reached != self.n {
            return Err(GraphError::Disconnected { reached, n: self.n });
        }
        if self.n == 1 {
            return Ok(vec![VertexSet::singleton(1, 0)]);
        }

        // Iterative Hopcroft-Tarjan with an explicit edge stack.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut next_idx = vec![0usize; n];
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![0usize];
        let mut timer = 0;
        disc[0] = 0;
        low[0] = 0;
        let mut out = Vec::new();

        while let Some(&v) = stack.last() {
            if next_idx[v] < self.adj[v].len() {
                let w = self.adj[v][next_idx[v]];
                next_idx[v] += 1;
                if disc[w] == usize::MAX {
                    timer += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    parent[w] = v;
                    edge_stack.push((v, w));
                    stack.push(w);
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut set = VertexSet::empty(n);
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            set.insert(a);
                            set.insert(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        out.push(set);
                    }
                }
            }
        }

        let mut keyed: Vec<(Vec<usize>, VertexSet)> =
            out.into_iter().map(|s| (s.to_vec(), s)).collect();
        keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(keyed.into_iter().map(|(_, s)| s).collect())
    }

    /// Parses the "n m" edge-list text format: a header line with the
    /// vertex and edge counts, then one "u v" pair per line.
    pub fn parse_edge_list_text(text: &str) -> Result<Graph, EdgeListError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| EdgeListError::Parse {
                line: 1,
                msg: "missing \"n m\" header".into(),
            })?;
        let parse_num = |tok: &str, line: usize| {
            tok.parse::<usize>().map_err(|_| EdgeListError::Parse {
                line,
                msg: format!("bad integer {tok:?}"),
            })
        };
        let mut toks = header.split_whitespace();
        let n = parse_num(
            toks.next().ok_or_else(|| EdgeListError::Parse {
                line: 1,
                msg: "missing vertex count".into(),
            })?,
            1,
        )?;
        let m = parse_num(
            toks.next().ok_or_else(|| EdgeListError::Parse {
                line: 1,
                msg: "missing edge count".into(),
            })?,
            1,
        )?;
        if toks.next().is_some() {
            return Err(EdgeListError::Parse {
                line: 1,
                msg: "header must be exactly \"n m\"".into(),
            });
        }
        let mut pairs = Vec::with_capacity(m);
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let u = parse_num(
                toks.next().ok_or_else(|| EdgeListError::Parse {
                    line: idx + 1,
                    msg: "missing endpoint".into(),
                })?,
                idx + 1,
            )?;
            let v = parse_num(
                toks.next().ok_or_else(|| EdgeListError::Parse {
                    line: idx + 1,
                    msg: "missing endpoint".into(),
                })?,
                idx + 1,
            )?;
            if toks.next().is_some() {
                return Err(EdgeListError::Parse {
                    line: idx + 1,
                    msg: "expected exactly two endpoints".into(),
                });
            }
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(EdgeListError::Parse {
                line: 1,
                msg: format!("header promises {m} edges, found {}", pairs.len()),
            });
        }
        Ok(Graph::from_edge_list(n, &pairs)?)
    }

    /// Writes the "n m" edge-list text format.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    fn from_graph(g: &Graph) -> Result<DistanceMatrix, GraphError> {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            let row = g.bfs_distances(v);
            if v == 0 {
                let reached = row.iter().filter(|&&d| d != u32::MAX).count();
                if reached != n {
                    return Err(GraphError::Disconnected { reached, n });
                }
            }
            dist.extend_from_slice(&row);
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// d(u, v).
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Maximum distance from `u`.
    pub fn eccentricity(&self, u: usize) -> usize {
        (0..self.n).map(|v| self.get(u, v)).max().unwrap_or(0)
    }

    /// Maximum entry of the matrix.
    pub fn max_distance(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// The metric interval `[u, v]`: all vertices lying on some
    /// shortest u-v path, i.e. `x` with `d(u,x) + d(x,v) = d(u,v)`.
    pub fn interval(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        for &x in &[u, v] {
            if x >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        let duv = self.get(u, v);
        let mut set = VertexSet::empty(self.n);
        for x in 0..self.n {
            if self.get(u, x) + self.get(x, v) == duv {
                set.insert(x);
            }
        }
        Ok(set)
    }

    /// `|[u, v]|` without materializing the set.
    pub(crate) fn interval_size(&self, u: usize, v: usize) -> usize {
        let duv = self.get(u, v);
        (0..self.n)
            .filter(|&x| self.get(u, x) + self.get(x, v) == duv)
            .count()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                write!(f, "{:3}", self.get(u, v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A subset of `0..n` with bitset storage.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn singleton(n: usize, v: usize) -> VertexSet {
        let mut s = VertexSet::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Size of the universe `0..n`, not of the set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
