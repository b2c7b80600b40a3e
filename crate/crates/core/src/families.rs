//! Deterministic graph constructors: the standard families, the
//! extremal trees T(n, l), Cartesian products, the bundled named
//! fixtures, and a Pruefer decoder for sampling random trees in tests.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Bistar,
    Complete,
    CompleteBipartite,
    Hypercube,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Bistar,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Bistar => "bistar",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Number of size parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::Bistar | Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    /// Smallest accepted parameter value.
    fn min_size(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }
}

/// A family tag with its size parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> FamilySpec {
        FamilySpec { family, params }
    }

    pub fn path(n: usize) -> FamilySpec {
        FamilySpec::new(Family::Path, vec![n])
    }
    pub fn cycle(n: usize) -> FamilySpec {
        FamilySpec::new(Family::Cycle, vec![n])
    }
    pub fn star(leaves: usize) -> FamilySpec {
        FamilySpec::new(Family::Star, vec![leaves])
    }
    pub fn bistar(p: usize, q: usize) -> FamilySpec {
        FamilySpec::new(Family::Bistar, vec![p, q])
    }
    pub fn complete(n: usize) -> FamilySpec {
        FamilySpec::new(Family::Complete, vec![n])
    }
    pub fn complete_bipartite(a: usize, b: usize) -> FamilySpec {
        FamilySpec::new(Family::CompleteBipartite, vec![a, b])
    }
    pub fn hypercube(dim: usize) -> FamilySpec {
        FamilySpec::new(Family::Hypercube, vec![dim])
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} takes {expected} size parameter(s), got {got}")]
    BadArity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{family} size must be at least 1")]
    SizeZero { family: &'static str },
    #[error("{family} needs size at least {min}, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("extremal tree needs n >= 4 and 3 <= l <= n-1, got n={n}, l={l}")]
    BadParams { n: usize, l: usize },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("pruefer sequence entry {entry} out of range for {n} vertices")]
    BadPruefer { entry: usize, n: usize },
}

/// Builds the graph a family spec describes. Vertex numbering is
/// canonical per family; for the hypercube, vertex `i` is the binary
/// word of `i`.
pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let family = spec.family;
    let name = family.name();
    if spec.params.len() != family.arity() {
        return Err(FamilyError::BadArity {
            family: name,
            expected: family.arity(),
            got: spec.params.len(),
        });
    }
    for &p in &spec.params {
        if p == 0 {
            return Err(FamilyError::SizeZero { family: name });
        }
        if p < family.min_size() {
            return Err(FamilyError::SizeTooSmall {
                family: name,
                min: family.min_size(),
                got: p,
            });
        }
    }
    let g = match family {
        Family::Path => {
            let n = spec.params[0];
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &pairs)
        }
        Family::Cycle => {
            let n = spec.params[0];
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &pairs)
        }
        Family::Star => {
            // center 0, leaves 1..=l
            let l = spec.params[0];
            let pairs: Vec<_> = (1..=l).map(|i| (0, i)).collect();
            Graph::from_edge_list(l + 1, &pairs)
        }
        Family::Bistar => {
            // adjacent centers 0 and 1 with p and q pendant leaves
            let (p, q) = (spec.params[0], spec.params[1]);
            let mut pairs = vec![(0, 1)];
            pairs.extend((0..p).map(|i| (0, 2 + i)));
            pairs.extend((0..q).map(|i| (1, 2 + p + i)));
            Graph::from_edge_list(p + q + 2, &pairs)
        }
        Family::Complete => {
            let n = spec.params[0];
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            Graph::from_edge_list(n, &pairs)
        }
        Family::CompleteBipartite => {
            // part {0..a} then part {a..a+b}
            let (a, b) = (spec.params[0], spec.params[1]);
            let mut pairs = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    pairs.push((u, a + v));
                }
            }
            Graph::from_edge_list(a + b, &pairs)
        }
        Family::Hypercube => {
            let dim = spec.params[0];
            let n = 1usize << dim;
            let mut pairs = Vec::new();
            for u in 0..n {
                for bit in 0..dim {
                    let v = u ^ (1 << bit);
                    if u < v {
                        pairs.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &pairs)
        }
    };
    Ok(g.expect("family constructions are valid"))
}

/// The extremal tree T(n, l): a star with l branches whose lengths
/// differ by at most one, totalling n vertices. The
/// `m = (n-1) mod l` longer branches come first. The center is vertex
/// 0 and each branch is numbered consecutively outward, so the leaves
/// are the last vertex of each branch.
pub fn extremal_tree(n: usize, l: usize) -> Result<Graph, FamilyError> {
    if n < 4 || l < 3 || l > n - 1 {
        return Err(FamilyError::BadParams { n, l });
    }
    let m = (n - 1) % l;
    let base = (n - l - 1) / l;
    let mut pairs = Vec::with_capacity(n - 1);
    let mut next = 1;
    for branch in 0..l {
        let inner = base + usize::from(branch < m);
        let mut prev = 0;
        for _ in 0..=inner {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(Graph::from_edge_list(n, &pairs).expect("subdivided star is valid"))
}

/// Cartesian product: vertex `(i, j)` becomes `i * h.n() + j`; edges
/// step along one factor while the other coordinate is fixed. Both
/// factors must be connected.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    for f in [g, h] {
        if !f.is_connected() {
            return Err(GraphError::Disconnected {
                reached: 0,
                n: f.n(),
            });
        }
    }
    let (ng, nh) = (g.n(), h.n());
    let mut pairs = Vec::with_capacity(g.m() * nh + h.m() * ng);
    for &(u, v) in g.edges() {
        for j in 0..nh {
            pairs.push((u * nh + j, v * nh + j));
        }
    }
    for i in 0..ng {
        for &(u, v) in h.edges() {
            pairs.push((i * nh + u, i * nh + v));
        }
    }
    Graph::from_edge_list(ng * nh, &pairs)
}

/// A named fixture graph with its label-to-index table.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub labels: Vec<(&'static str, usize)>,
}

impl Fixture {
    /// Index of a labelled vertex; panics on unknown labels.
    pub fn label(&self, name: &str) -> usize {
        self.labels
            .iter()
            .find(|(l, _)| *l == name)
            .unwrap_or_else(|| panic!("fixture {} has no label {name:?}", self.name))
            .1
    }
}

pub const FIXTURE_NAMES: [&str; 4] = ["fig2_theta", "fig3_G", "fig3_H", "fig4_median"];

/// Builds one of the bundled counterexample fixtures.
///
/// * `fig2_theta` -- three internally disjoint length-4 paths from x
///   to a hub, plus a pendant y on the hub; its triametral triple
///   (a, b, c) sits mid-path, one per branch.
/// * `fig3_G` -- a tripod between m and x with a pendant y.
/// * `fig3_H` -- K(3,3) plus the edges xm and my.
/// * `fig4_median` -- a 4-cycle (m, b, x, c) with a pendant a on m.
pub fn fixture(name: &str) -> Result<Fixture, FamilyError> {
    let (graph, labels): (Graph, Vec<(&'static str, usize)>) = match name {
        "fig2_theta" => {
            // 0=x, 1..=4 = middle path, 5=y, 6..=8 top path, 9..=11
            // bottom path; labels a, b, c are the mid-path vertices.
            let edges = [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (0, 6),
                (6, 7),
                (7, 8),
                (8, 4),
                (0, 9),
                (9, 10),
                (10, 11),
                (11, 4),
            ];
            (
                Graph::from_edge_list(12, &edges).unwrap(),
                vec![
                    ("x", 0),
                    ("m1", 1),
                    ("m2", 2),
                    ("b", 2),
                    ("m3", 3),
                    ("m4", 4),
                    ("y", 5),
                    ("t1", 6),
                    ("t2", 7),
                    ("a", 7),
                    ("t3", 8),
                    ("b1", 9),
                    ("b2", 10),
                    ("c", 10),
                    ("b3", 11),
                ],
            )
        }
        "fig3_G" => {
            let edges = [(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)];
            (
                Graph::from_edge_list(6, &edges).unwrap(),
                vec![("y", 0), ("m", 1), ("a", 2), ("b", 3), ("c", 4), ("x", 5)],
            )
        }
        "fig3_H" => {
            let edges = [
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (4, 5),
            ];
            (
                Graph::from_edge_list(6, &edges).unwrap(),
                vec![("a", 0), ("b", 1), ("c", 2), ("x", 3), ("m", 4), ("y", 5)],
            )
        }
        "fig4_median" => {
            let edges = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)];
            (
                Graph::from_edge_list(5, &edges).unwrap(),
                vec![("a", 0), ("m", 1), ("b", 2), ("c", 3), ("x", 4)],
            )
        }
        other => return Err(FamilyError::UnknownFixture(other.to_string())),
    };
    let name = FIXTURE_NAMES
        .iter()
        .find(|&&fixed| fixed == name)
        .expect("matched above");
    Ok(Fixture {
        name,
        graph,
        labels,
    })
}

/// Decodes a Pruefer sequence into the labelled tree on
/// `seq.len() + 2` vertices. Uniform random sequences give uniform
/// random labelled trees, which is how the test suite samples them.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    for &s in seq {
        if s >= n {
            return Err(FamilyError::BadPruefer { entry: s, n });
        }
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &s in seq {
        pairs.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr = (ptr + 1..n)
                .find(|&v| degree[v] == 1)
                .expect("leaf remains");
            leaf = ptr;
        }
    }
    pairs.push((leaf, n - 1));
    Ok(Graph::from_edge_list(n, &pairs).expect("pruefer decoding is a tree"))
}
