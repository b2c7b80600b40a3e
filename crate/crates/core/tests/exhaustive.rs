//! Exhaustive checks over every connected labelled graph of small
//! order: class-recognizer cross-validation, bound laws, and the
//! block-graph structure of triametral triples.

mod common;

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};

use triameter::classes::{
    antipode_map, classify_with_matrix, four_point_holds, is_block_graph, is_distance_hereditary,
};
use triameter::explorer::{
    enumerate_connected, par_for_each_connected, scan_range, ClassFilter, Hypothesis, ScanConfig,
};
use triameter::families::{build, FamilySpec};
use triameter::metrics::{diameter, triameter_antipodal, triameter_bruteforce};
use triameter::Graph;

/// Connected labelled graph counts by order (A001187).
const CONNECTED_COUNTS: [u64; 8] = [0, 1, 1, 4, 38, 728, 26704, 1866256];

/// Independent girth oracle: the shortest cycle through an edge is
/// that edge plus a shortest path between its endpoints avoiding it.
fn girth_oracle(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || (x, y) == (v, u) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    best
}

#[test]
fn battery_on_all_connected_graphs_up_to_6() {
    for (n, &expected_count) in CONNECTED_COUNTS.iter().enumerate().skip(1).take(6) {
        let mut count = 0u64;
        for g in enumerate_connected(n).unwrap() {
            count += 1;
            let dm = g.distance_matrix().unwrap();
            let diam = dm.max_distance();
            let tri = triameter_bruteforce(&dm);

            // sandwich and girth lower bound
            assert!(2 * diam <= tri.value && tri.value <= 3 * diam, "{g:?}");
            assert_eq!(g.girth(), girth_oracle(&g), "{g:?}");
            if let Some(girth) = g.girth() {
                assert!(tri.value >= girth, "{g:?}");
            } else {
                assert_eq!(g.m(), n - 1, "{g:?}");
            }

            // the 4-point condition recognizes exactly the block graphs
            let profile = classify_with_matrix(&g, &dm);
            assert_eq!(profile.is_block, four_point_holds(&dm), "{g:?}");

            // implication chain (also asserted inside classify)
            assert!(!profile.is_tree || (profile.is_block && profile.is_median));
            assert!(!profile.is_block || profile.is_distance_hereditary);
            assert!(!profile.is_median || profile.is_modular);

            // block decomposition identities: the size sum is n-1 on
            // every connected graph, and the edge count matches the
            // clique count exactly on block graphs
            let blocks = g.blocks().unwrap();
            let size_sum: usize = blocks.iter().map(|b| b.len() - 1).sum();
            assert_eq!(size_sum, n - 1, "{g:?}");
            let clique_edges: usize = blocks.iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
            assert_eq!(clique_edges == g.m(), profile.is_block, "{g:?}");

            // antipodal graphs: triameter formula and q4
            if let Some(map) = &profile.antipode {
                let fast = triameter_antipodal(&dm, map).unwrap();
                assert_eq!(fast.value, tri.value, "{g:?}");
                for &(x, y) in &diameter(&dm).pairs {
                    let best = (0..n)
                        .map(|z| diam + dm.get(x, z) + dm.get(y, z))
                        .max()
                        .unwrap();
                    assert_eq!(best, tri.value, "{g:?} pair ({x},{y})");
                }
            }
        }
        assert_eq!(count, expected_count);
    }
}

#[test]
fn distance_hereditary_accepts_blocks_and_rejects_c5() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let dm = g.distance_matrix().unwrap();
            if is_block_graph(&g).unwrap() {
                assert!(is_distance_hereditary(&dm), "{g:?}");
            }
        }
    }
    let c5 = build(&FamilySpec::cycle(5)).unwrap();
    assert!(!is_distance_hereditary(&c5.distance_matrix().unwrap()));
}

/// The defining property: every connected induced subgraph preserves
/// distances.
fn distance_hereditary_oracle(g: &Graph, dm: &triameter::DistanceMatrix) -> bool {
    let n = g.n();
    for subset in 1u32..1 << n {
        let verts: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
        if verts.len() < 3 {
            continue;
        }
        let mut pairs = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if g.has_edge(u, v) {
                    pairs.push((i, j));
                }
            }
        }
        let sub = Graph::from_edge_list(verts.len(), &pairs).unwrap();
        let Ok(sub_dm) = sub.distance_matrix() else {
            continue; // only connected induced subgraphs count
        };
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if sub_dm.get(i, j) != dm.get(verts[i], verts[j]) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn metric_characterization_matches_the_induced_subgraph_definition() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let dm = g.distance_matrix().unwrap();
            assert_eq!(
                is_distance_hereditary(&dm),
                distance_hereditary_oracle(&g, &dm),
                "{g:?}"
            );
        }
    }
}

#[test]
fn block_graphs_up_to_7_pass_q3_and_q4_as_a_scan() {
    let cfg = ScanConfig::new(
        ClassFilter::Block,
        &[
            Hypothesis::TriametralContainsDiametral,
            Hypothesis::DiametralPairExtends,
        ],
    );
    let outcome = scan_range(1, 7, &cfg).unwrap();
    assert_eq!(outcome.summary.violations, 0, "{:?}", outcome.reports);
    assert_eq!(
        outcome.summary.scanned,
        CONNECTED_COUNTS[1..=7].iter().sum::<u64>()
    );
    assert!(outcome.summary.in_class > 0);
}

#[test]
fn order_7_block_fourpoint_and_antipodal_battery() {
    let disagreements = AtomicU64::new(0);
    let antipodal_q4_failures = AtomicU64::new(0);
    let connected = AtomicU64::new(0);
    par_for_each_connected(7, |g: &Graph| {
        connected.fetch_add(1, Ordering::Relaxed);
        let dm = g.distance_matrix().unwrap();
        if is_block_graph(g).unwrap() != four_point_holds(&dm) {
            disagreements.fetch_add(1, Ordering::Relaxed);
        }
        if let Some(_map) = antipode_map(&dm).unwrap() {
            let diam = dm.max_distance();
            let tr = triameter_bruteforce(&dm).value;
            for &(x, y) in &diameter(&dm).pairs {
                let best = (0..7)
                    .map(|z| diam + dm.get(x, z) + dm.get(y, z))
                    .max()
                    .unwrap();
                if best != tr {
                    antipodal_q4_failures.fetch_add(1, Ordering::Relaxed);
                }
            }
        }
    })
    .unwrap();
    assert_eq!(connected.load(Ordering::Relaxed), CONNECTED_COUNTS[7]);
    assert_eq!(disagreements.load(Ordering::Relaxed), 0);
    assert_eq!(antipodal_q4_failures.load(Ordering::Relaxed), 0);
}

#[test]
fn antipodal_formula_matches_brute_force_on_cubes_and_even_cycles() {
    for dim in 1..=7 {
        let cube = build(&FamilySpec::hypercube(dim)).unwrap();
        let dm = cube.distance_matrix().unwrap();
        let map = antipode_map(&dm).unwrap().expect("cubes are antipodal");
        assert_eq!(
            triameter_antipodal(&dm, &map).unwrap().value,
            triameter_bruteforce(&dm).value,
            "Q{dim}"
        );
    }
    for k in 2..=8 {
        let cycle = build(&FamilySpec::cycle(2 * k)).unwrap();
        let dm = cycle.distance_matrix().unwrap();
        let map = antipode_map(&dm)
            .unwrap()
            .expect("even cycles are antipodal");
        assert_eq!(
            triameter_antipodal(&dm, &map).unwrap().value,
            triameter_bruteforce(&dm).value,
            "C{}",
            2 * k
        );
    }
}
