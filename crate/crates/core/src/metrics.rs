//! Diameter and triameter certificates.
//!
//! The exhaustive brute-force route works on every connected graph and
//! lists all extremal pairs/triples. Three fast paths compute the same
//! value with one witness when the input is a block graph, a tree, or
//! an antipodal graph; the brute-force route doubles as their oracle in
//! the test suite.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, GraphError, VertexSet};

/// How a triametral certificate was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriameterMethod {
    BruteForce,
    BlockFast,
    TreeLinear,
    AntipodalFormula,
}

impl TriameterMethod {
    pub fn name(self) -> &'static str {
        match self {
            TriameterMethod::BruteForce => "brute_force",
            TriameterMethod::BlockFast => "block_fast",
            TriameterMethod::TreeLinear => "tree_linear",
            TriameterMethod::AntipodalFormula => "antipodal_formula",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("not a block graph: some block is not complete")]
    NotBlockGraph,
    #[error("not a tree")]
    NotATree,
    #[error("supplied antipode map is not valid for this graph")]
    NotAntipodal,
}

/// The diameter with every diametral pair and the peripheral set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralCertificate {
    pub value: usize,
    #[serde(rename = "witnesses")]
    pub pairs: Vec<(usize, usize)>,
    pub peripheral: VertexSet,
}

/// The triameter with witnessing triples.
///
/// The brute-force method lists every distinct-vertex triametral triple
/// in lexicographic order; fast methods certify the value with a single
/// witness (which may repeat a vertex on graphs of order below three).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriametralCertificate {
    pub value: usize,
    #[serde(rename = "witnesses")]
    pub triples: Vec<[usize; 3]>,
    pub method: TriameterMethod,
}

/// Largest pairwise distance with all realizing pairs, sorted
/// lexicographically. On the one-vertex graph the value is 0 and the
/// single vertex counts as peripheral.
pub fn diameter(dm: &DistanceMatrix) -> DiametralCertificate {
    let n = dm.n();
    if n == 1 {
        return DiametralCertificate {
            value: 0,
            pairs: Vec::new(),
            peripheral: VertexSet::singleton(1, 0),
        };
    }
    let value = dm.max_distance();
    let mut pairs = Vec::new();
    let mut peripheral = VertexSet::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if dm.get(u, v) == value {
                pairs.push((u, v));
                peripheral.insert(u);
                peripheral.insert(v);
            }
        }
    }
    DiametralCertificate {
        value,
        pairs,
        peripheral,
    }
}

/// d(u,v) + d(u,w) + d(v,w); symmetric in all three arguments, which
/// may repeat.
pub fn triple_perimeter(
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    w: usize,
) -> Result<usize, GraphError> {
    let n = dm.n();
    for &x in &[u, v, w] {
        if x >= n {
            return Err(GraphError::OutOfRange { vertex: x, n });
        }
    }
    Ok(dm.get(u, v) + dm.get(u, w) + dm.get(v, w))
}

/// Exact maximum of the triple perimeter over all vertex triples, with
/// the exhaustive list of distinct-vertex triametral triples.
///
/// Orders one and two have no distinct triples; their values follow the
/// definition with repeated vertices (0 and twice the edge length).
pub fn triameter_bruteforce(dm: &DistanceMatrix) -> TriametralCertificate {
    let n = dm.n();
    if n == 1 {
        return TriametralCertificate {
            value: 0,
            triples: Vec::new(),
            method: TriameterMethod::BruteForce,
        };
    }
    if n == 2 {
        return TriametralCertificate {
            value: 2 * dm.get(0, 1),
            triples: Vec::new(),
            method: TriameterMethod::BruteForce,
        };
    }
    let mut value = 0;
    let mut triples = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let duv = dm.get(u, v);
            for w in v + 1..n {
                let p = duv + dm.get(u, w) + dm.get(v, w);
                if p > value {
                    value = p;
                    triples.clear();
                }
                if p == value {
                    triples.push([u, v, w]);
                }
            }
        }
    }
    TriametralCertificate {
        value,
        triples,
        method: TriameterMethod::BruteForce,
    }
}

fn is_block_graph_internal(g: &Graph) -> bool {
    match g.blocks() {
        Ok(blocks) => blocks.iter().all(|b| {
            let vs = b.to_vec();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        }),
        Err(_) => false,
    }
}

/// Triameter of a connected block graph: any diametral pair (x, y)
/// extends optimally, so the value is
/// `d(x,y) + max_z (d(x,z) + d(y,z))`. Takes the lexicographically
/// first diametral pair from the exact matrix and breaks argmax ties
/// toward the smallest vertex.
pub fn triameter_block_fast(
    g: &Graph,
    dm: &DistanceMatrix,
) -> Result<TriametralCertificate, MetricsError> {
    if !is_block_graph_internal(g) {
        return Err(MetricsError::NotBlockGraph);
    }
    let n = dm.n();
    if n == 1 {
        return Ok(TriametralCertificate {
            value: 0,
            triples: vec![[0, 0, 0]],
            method: TriameterMethod::BlockFast,
        });
    }
    let diam = dm.max_distance();
    let (x, y) = first_pair_at(dm, diam);
    let (z, ext) = best_extension(dm, x, y);
    let mut triple = [x, y, z];
    triple.sort_unstable();
    Ok(TriametralCertificate {
        value: diam + ext,
        triples: vec![triple],
        method: TriameterMethod::BlockFast,
    })
}

fn first_pair_at(dm: &DistanceMatrix, value: usize) -> (usize, usize) {
    let n = dm.n();
    for u in 0..n {
        for v in u + 1..n {
            if dm.get(u, v) == value {
                return (u, v);
            }
        }
    }
    unreachable!("distance matrix attains its maximum")
}

fn best_extension(dm: &DistanceMatrix, x: usize, y: usize) -> (usize, usize) {
    let mut best = (0, 0);
    for z in 0..dm.n() {
        let s = dm.get(x, z) + dm.get(y, z);
        if s > best.1 {
            best = (z, s);
        }
    }
    best
}

/// Linear-time triameter of a tree: a double BFS sweep locates an exact
/// diametral pair (u, v), then one BFS from each endpoint finds the
/// best third vertex. No distance matrix is built.
pub fn triameter_tree_linear(g: &Graph) -> Result<TriametralCertificate, MetricsError> {
    if !g.is_tree() {
        return Err(MetricsError::NotATree);
    }
    let n = g.n();
    if n == 1 {
        return Ok(TriametralCertificate {
            value: 0,
            triples: vec![[0, 0, 0]],
            method: TriameterMethod::TreeLinear,
        });
    }
    let farthest = |dist: &[u32]| -> usize {
        let mut best = 0;
        for (v, &d) in dist.iter().enumerate() {
            if d > dist[best] {
                best = v;
            }
        }
        best
    };
    let from0 = g.bfs_distances(0);
    let u = farthest(&from0);
    let from_u = g.bfs_distances(u);
    let v = farthest(&from_u);
    let from_v = g.bfs_distances(v);

    let mut z = 0;
    let mut ext = 0;
    for w in 0..n {
        let s = (from_u[w] + from_v[w]) as usize;
        if s > ext {
            ext = s;
            z = w;
        }
    }
    let mut triple = [u, v, z];
    triple.sort_unstable();
    Ok(TriametralCertificate {
        value: from_u[v] as usize + ext,
        triples: vec![triple],
        method: TriameterMethod::TreeLinear,
    })
}

/// Triameter of an antipodal graph: twice the diameter, witnessed by
/// extending a pair with an antipode. The map is revalidated (length,
/// involution, antipodal distance equals the diameter); the deeper
/// full-interval property is the recognizer's job.
pub fn triameter_antipodal(
    dm: &DistanceMatrix,
    antipode: &[usize],
) -> Result<TriametralCertificate, MetricsError> {
    let n = dm.n();
    let diam = dm.max_distance();
    if antipode.len() != n {
        return Err(MetricsError::NotAntipodal);
    }
    for u in 0..n {
        let a = antipode[u];
        if a >= n || antipode[a] != u || dm.get(u, a) != diam {
            return Err(MetricsError::NotAntipodal);
        }
    }
    let triple = if n == 1 {
        [0, 0, 0]
    } else {
        let mut t = [0, 1, antipode[1]];
        t.sort_unstable();
        t
    };
    let value = 2 * diam;
    debug_assert_eq!(
        triple_perimeter(dm, triple[0], triple[1], triple[2]).unwrap(),
        value
    );
    Ok(TriametralCertificate {
        value,
        triples: vec![triple],
        method: TriameterMethod::AntipodalFormula,
    })
}
