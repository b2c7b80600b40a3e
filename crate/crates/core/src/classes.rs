//! Recognizers for the metric graph classes the crate reasons about:
//! trees, block graphs, median and modular graphs, distance-hereditary
//! graphs, and antipodal graphs.
//!
//! Every predicate follows its defining condition directly (O(n^3) to
//! O(n^4)); at the scales handled here that is fast, and it keeps each
//! recognizer independently auditable. The 4-point condition doubles as
//! a cross-validating oracle for the block-graph recognizer.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, GraphError, VertexSet};

/// Membership flags for one graph, plus the antipode map when the
/// graph is antipodal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassProfile {
    #[serde(rename = "tree")]
    pub is_tree: bool,
    #[serde(rename = "block")]
    pub is_block: bool,
    #[serde(rename = "median")]
    pub is_median: bool,
    #[serde(rename = "modular")]
    pub is_modular: bool,
    #[serde(rename = "distance_hereditary")]
    pub is_distance_hereditary: bool,
    #[serde(rename = "antipodal")]
    pub is_antipodal: bool,
    pub antipode: Option<Vec<usize>>,
}

/// Two full-interval partners for one vertex would contradict the
/// uniqueness of antipodes; seeing this error means the recognizer or
/// the distance matrix is broken.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("vertex {vertex} has two antipode candidates {first} and {second}")]
pub struct AmbiguousAntipode {
    pub vertex: usize,
    pub first: usize,
    pub second: usize,
}

/// True iff every block induces a complete subgraph.
pub fn is_block_graph(g: &Graph) -> Result<bool, GraphError> {
    let blocks = g.blocks()?;
    Ok(blocks.iter().all(|b| {
        let vs = b.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }))
}

#[inline]
fn pairing_sums(
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
    z: usize,
    t: usize,
) -> (usize, usize, usize) {
    (
        dm.get(x, y) + dm.get(z, t),
        dm.get(x, z) + dm.get(y, t),
        dm.get(x, t) + dm.get(y, z),
    )
}

/// The 4-point condition: for every quadruple,
/// `d(x,y) + d(z,t) <= max(d(x,z) + d(y,t), d(x,t) + d(y,z))` under all
/// orderings -- equivalently, the largest of the three pairing sums is
/// attained at least twice. Characterizes block graphs, which the test
/// suite exploits as an oracle.
pub fn four_point_holds(dm: &DistanceMatrix) -> bool {
    let n = dm.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for t in z + 1..n {
                    let (s1, s2, s3) = pairing_sums(dm, x, y, z, t);
                    let m = s1.max(s2).max(s3);
                    let hits = usize::from(s1 == m) + usize::from(s2 == m) + usize::from(s3 == m);
                    if hits < 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Distance-hereditary check via the metric characterization: for every
/// quadruple, at least two of the three pairing sums coincide. (The
/// strictly stronger variant where the two *largest* must coincide is
/// exactly the 4-point condition above.)
pub fn is_distance_hereditary(dm: &DistanceMatrix) -> bool {
    let n = dm.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for t in z + 1..n {
                    let (s1, s2, s3) = pairing_sums(dm, x, y, z, t);
                    if s1 != s2 && s1 != s3 && s2 != s3 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Interval bitmasks for all vertex pairs, flattened row-major.
/// Only for graphs with at most 64 vertices.
fn interval_masks64(dm: &DistanceMatrix) -> Vec<u64> {
    let n = dm.n();
    debug_assert!(n <= 64);
    let mut masks = vec![0u64; n * n];
    for u in 0..n {
        for v in u..n {
            let duv = dm.get(u, v);
            let mut mask = 0u64;
            for x in 0..n {
                if dm.get(u, x) + dm.get(x, v) == duv {
                    mask |= 1 << x;
                }
            }
            masks[u * n + v] = mask;
            masks[v * n + u] = mask;
        }
    }
    masks
}

fn triple_intersections_ok(dm: &DistanceMatrix, accept: impl Fn(usize) -> bool) -> bool {
    let n = dm.n();
    if n <= 64 {
        let masks = interval_masks64(dm);
        for u in 0..n {
            for v in u + 1..n {
                let uv = masks[u * n + v];
                for w in v + 1..n {
                    let meet = uv & masks[u * n + w] & masks[v * n + w];
                    if !accept(meet.count_ones() as usize) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    let mut intervals: Vec<VertexSet> = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            intervals.push(dm.interval(u, v).expect("in range"));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let meet = intervals[u * n + v]
                    .intersect(&intervals[u * n + w])
                    .intersect(&intervals[v * n + w]);
                if !accept(meet.len()) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff every triple's three-way interval intersection is a single
/// vertex (its median).
pub fn is_median(dm: &DistanceMatrix) -> bool {
    triple_intersections_ok(dm, |count| count == 1)
}

/// True iff every triple's three-way interval intersection is
/// non-empty.
pub fn is_modular(dm: &DistanceMatrix) -> bool {
    triple_intersections_ok(dm, |count| count >= 1)
}

/// The antipode map, if the graph is antipodal: for each `u` the unique
/// `u'` whose interval `[u, u']` is the whole vertex set. Returns
/// `None` when some vertex has no such partner; two partners for one
/// vertex is impossible and reported as a hard error.
pub fn antipode_map(dm: &DistanceMatrix) -> Result<Option<Vec<usize>>, AmbiguousAntipode> {
    let n = dm.n();
    let mut map = Vec::with_capacity(n);
    for u in 0..n {
        let mut found: Option<usize> = None;
        for v in 0..n {
            if dm.interval_size(u, v) == n {
                if let Some(first) = found {
                    return Err(AmbiguousAntipode {
                        vertex: u,
                        first,
                        second: v,
                    });
                }
                found = Some(v);
            }
        }
        match found {
            Some(v) => map.push(v),
            None => return Ok(None),
        }
    }
    for u in 0..n {
        debug_assert_eq!(map[map[u]], u, "antipode map must be an involution");
    }
    Ok(Some(map))
}

/// Runs every recognizer and bundles the flags. The class implications
/// (tree => block and median, block => distance-hereditary,
/// median => modular) are theorems, so they are asserted on the result.
pub fn classify(g: &Graph) -> Result<ClassProfile, GraphError> {
    let dm = g.distance_matrix()?;
    Ok(classify_with_matrix(g, &dm))
}

/// [`classify`] for callers that already computed the distance matrix.
pub fn classify_with_matrix(g: &Graph, dm: &DistanceMatrix) -> ClassProfile {
    let antipode = antipode_map(dm).expect("antipodes are unique");
    let profile = ClassProfile {
        is_tree: g.is_tree(),
        is_block: is_block_graph(g).expect("connected: distance matrix exists"),
        is_median: is_median(dm),
        is_modular: is_modular(dm),
        is_distance_hereditary: is_distance_hereditary(dm),
        is_antipodal: antipode.is_some(),
        antipode,
    };
    assert!(!profile.is_tree || (profile.is_block && profile.is_median));
    assert!(!profile.is_block || profile.is_distance_hereditary);
    assert!(!profile.is_median || profile.is_modular);
    if let Some(map) = &profile.antipode {
        let diam = dm.max_distance();
        for (u, &a) in map.iter().enumerate() {
            assert_eq!(dm.get(u, a), diam);
        }
    }
    profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, extremal_tree, fixture, FamilySpec};

    fn dm(g: &Graph) -> DistanceMatrix {
        g.distance_matrix().unwrap()
    }

    #[test]
    fn trees_are_block_graphs() {
        for (n, l) in [(7, 3), (10, 4), (12, 5)] {
            let t = extremal_tree(n, l).unwrap();
            assert!(is_block_graph(&t).unwrap());
        }
        let c4 = build(&FamilySpec::cycle(4)).unwrap();
        assert!(!is_block_graph(&c4).unwrap());
        let fx = fixture("fig2_theta").unwrap();
        assert!(!is_block_graph(&fx.graph).unwrap());
    }

    #[test]
    fn four_point_examples() {
        let p4 = build(&FamilySpec::path(4)).unwrap();
        assert!(four_point_holds(&dm(&p4)));
        let c4 = build(&FamilySpec::cycle(4)).unwrap();
        assert!(!four_point_holds(&dm(&c4)));
        let k4 = build(&FamilySpec::complete(4)).unwrap();
        assert!(four_point_holds(&dm(&k4)));
    }

    #[test]
    fn distance_hereditary_examples() {
        let g = fixture("fig3_G").unwrap();
        assert!(is_distance_hereditary(&dm(&g.graph)));
        let h = fixture("fig3_H").unwrap();
        assert!(is_distance_hereditary(&dm(&h.graph)));
        let c5 = build(&FamilySpec::cycle(5)).unwrap();
        assert!(!is_distance_hereditary(&dm(&c5)));
        // C4 separates distance-hereditary from the 4-point condition.
        let c4 = build(&FamilySpec::cycle(4)).unwrap();
        assert!(is_distance_hereditary(&dm(&c4)));
        assert!(!four_point_holds(&dm(&c4)));
    }

    #[test]
    fn median_examples() {
        let t = extremal_tree(9, 3).unwrap();
        assert!(is_median(&dm(&t)));
        let fx = fixture("fig4_median").unwrap();
        assert!(is_median(&dm(&fx.graph)));
        let k23 = build(&FamilySpec::complete_bipartite(2, 3)).unwrap();
        assert!(!is_median(&dm(&k23)));
    }

    #[test]
    fn modular_examples() {
        let k23 = build(&FamilySpec::complete_bipartite(2, 3)).unwrap();
        assert!(is_modular(&dm(&k23)));
        let g = fixture("fig3_G").unwrap();
        assert!(is_modular(&dm(&g.graph)));
        let c5 = build(&FamilySpec::cycle(5)).unwrap();
        assert!(!is_modular(&dm(&c5)));
    }

    #[test]
    fn antipode_examples() {
        let q3 = build(&FamilySpec::hypercube(3)).unwrap();
        let map = antipode_map(&dm(&q3)).unwrap().unwrap();
        for (u, &partner) in map.iter().enumerate() {
            assert_eq!(partner, u ^ 0b111);
        }
        let c6 = build(&FamilySpec::cycle(6)).unwrap();
        let map = antipode_map(&dm(&c6)).unwrap().unwrap();
        for (u, &partner) in map.iter().enumerate() {
            assert_eq!(partner, (u + 3) % 6);
        }
        let p3 = build(&FamilySpec::path(3)).unwrap();
        assert_eq!(antipode_map(&dm(&p3)).unwrap(), None);
    }

    #[test]
    fn classify_p4() {
        let p4 = build(&FamilySpec::path(4)).unwrap();
        let p = classify(&p4).unwrap();
        assert!(p.is_tree && p.is_block && p.is_median && p.is_modular);
        assert!(p.is_distance_hereditary);
        assert!(!p.is_antipodal);
        assert_eq!(p.antipode, None);
    }

    #[test]
    fn classify_q3() {
        let q3 = build(&FamilySpec::hypercube(3)).unwrap();
        let p = classify(&q3).unwrap();
        assert!(p.is_median && p.is_antipodal);
        assert!(!p.is_block);
    }

    #[test]
    fn classify_fig3_h() {
        let h = fixture("fig3_H").unwrap();
        let p = classify(&h.graph).unwrap();
        assert!(p.is_distance_hereditary);
        // H contains triangles (a, x, m), and a triangle's three-way
        // interval intersection is empty, so it is not modular.
        assert!(!p.is_modular && !p.is_median);
        assert!(!p.is_block);
    }

    #[test]
    fn classify_trivial_orders() {
        for g in [
            Graph::from_edge_list(1, &[]).unwrap(),
            Graph::from_edge_list(2, &[(0, 1)]).unwrap(),
        ] {
            let p = classify(&g).unwrap();
            assert!(p.is_tree && p.is_block && p.is_median && p.is_modular);
            assert!(p.is_distance_hereditary && p.is_antipodal);
        }
    }

    #[test]
    fn profile_serializes_to_documented_shape() {
        let q3 = build(&FamilySpec::hypercube(3)).unwrap();
        let json = serde_json::to_value(classify(&q3).unwrap()).unwrap();
        assert_eq!(json["tree"], false);
        assert_eq!(json["median"], true);
        assert_eq!(json["antipode"][0], 7);
        let p3 = build(&FamilySpec::path(3)).unwrap();
        let json = serde_json::to_value(classify(&p3).unwrap()).unwrap();
        assert!(json["antipode"].is_null());
    }

    #[test]
    fn generic_interval_path_handles_large_orders() {
        let p70 = build(&FamilySpec::path(70)).unwrap();
        assert!(is_median(&dm(&p70)));
        let c70 = build(&FamilySpec::cycle(70)).unwrap();
        assert!(!is_modular(&dm(&c70)));
        // 65 vertices: the first order past the bitmask fast path
        let p5 = build(&FamilySpec::path(5)).unwrap();
        let p13 = build(&FamilySpec::path(13)).unwrap();
        let grid = crate::families::cartesian_product(&p5, &p13).unwrap();
        let dm65 = dm(&grid);
        assert!(is_median(&dm65));
        assert!(is_modular(&dm65));
    }
}
