//! Shared helpers for the integration suites: an independent graph6
//! reference decoder and seeded random graph generators.
#![allow(dead_code)] // each test binary uses its own subset

use rand::rngs::StdRng;
use rand::Rng;

use triameter::families::tree_from_pruefer;
use triameter::Graph;

/// Independent graph6 decoder used as an oracle against the crate's
/// parser and encoder. Deliberately takes a different route: it
/// expands the whole payload into a bit vector first, then walks the
/// columns. Single-byte orders only.
pub fn reference_decode_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = s.trim().as_bytes();
    assert!(!bytes.is_empty());
    let n = (bytes[0] - 63) as usize;
    assert!(
        (1..=62).contains(&n),
        "reference decoder: single-byte orders only"
    );
    let mut bits = Vec::with_capacity((bytes.len() - 1) * 6);
    for &b in &bytes[1..] {
        assert!((63..=126).contains(&b));
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    assert!(bits.len() >= n * (n - 1) / 2);
    let mut edges = Vec::new();
    let mut k = 0;
    for col in 1..n {
        for row in 0..col {
            if bits[k] {
                edges.push((row, col));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    (n, edges)
}

/// Uniform random labelled tree on `n >= 1` vertices via a random
/// Pruefer sequence.
pub fn random_tree(n: usize, rng: &mut StdRng) -> Graph {
    match n {
        1 => Graph::from_edge_list(1, &[]).unwrap(),
        2 => Graph::from_edge_list(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_pruefer(&seq).unwrap()
        }
    }
}

/// Random connected graph: a random spanning tree plus Bernoulli
/// extra edges.
pub fn random_connected_graph(n: usize, extra_edge_prob: f64, rng: &mut StdRng) -> Graph {
    let tree = random_tree(n, rng);
    let mut pairs = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(extra_edge_prob) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Random graph with independent edges; may be disconnected.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut StdRng) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}
