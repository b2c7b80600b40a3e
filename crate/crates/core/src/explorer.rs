//! Exhaustive small-graph enumeration and hypothesis checking.
//!
//! Four hypothesis schemata are checked, named after the questions they
//! instantiate: q3 (every triametral triple contains a diametral pair),
//! q3prime (contains a peripheral vertex), q4 (every diametral pair
//! extends to a triametral triple), and q4prime (every peripheral
//! vertex lies in one). A scan filters a graph source through a class
//! predicate, checks the requested hypotheses, and emits one
//! independently re-verified report per violation.
//!
//! Enumeration is over labelled graphs with no isomorphism reduction:
//! duplicates cost time, not correctness. Work is sharded across
//! threads per contiguous mask ranges and merged back in enumeration
//! order, so output is byte-deterministic regardless of worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classes::{
    antipode_map, classify_with_matrix, is_block_graph, is_distance_hereditary, is_median,
    is_modular, ClassProfile,
};
use crate::graph::{DistanceMatrix, Graph};
use crate::graph6::{parse_graph6, write_graph6, Graph6Error};
use crate::metrics::{diameter, triameter_bruteforce, DiametralCertificate, TriametralCertificate};

/// Largest order the built-in enumerator handles; larger corpora come
/// from graph6 files.
pub const MAX_ENUM_ORDER: usize = 7;

#[derive(Debug, Error)]
pub enum ExplorerError {
    #[error("built-in enumeration supports up to {max} vertices, got {n}; supply a graph6 file for larger orders")]
    TooLarge { n: usize, max: usize },
    #[error("cannot enumerate graphs on zero vertices")]
    EmptyOrder,
    #[error("graph6 parse error at line {line}: {source}")]
    SourceParse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(
        "report for {graph6:?} ({hypothesis:?}) failed independent re-verification; this is a bug"
    )]
    VerificationFailed {
        graph6: String,
        hypothesis: Hypothesis,
    },
}

/// The four hypothesis schemata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Hypothesis {
    /// q3: every triametral triple contains a diametral pair.
    #[serde(rename = "q3")]
    TriametralContainsDiametral,
    /// q3prime: every triametral triple contains a peripheral vertex.
    #[serde(rename = "q3prime")]
    TriametralContainsPeripheral,
    /// q4: every diametral pair extends to a triametral triple.
    #[serde(rename = "q4")]
    DiametralPairExtends,
    /// q4prime: every peripheral vertex lies in some triametral triple.
    #[serde(rename = "q4prime")]
    PeripheralVertexExtends,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 4] = [
        Hypothesis::TriametralContainsDiametral,
        Hypothesis::TriametralContainsPeripheral,
        Hypothesis::DiametralPairExtends,
        Hypothesis::PeripheralVertexExtends,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::TriametralContainsDiametral => "q3",
            Hypothesis::TriametralContainsPeripheral => "q3prime",
            Hypothesis::DiametralPairExtends => "q4",
            Hypothesis::PeripheralVertexExtends => "q4prime",
        }
    }

    pub fn from_name(name: &str) -> Option<Hypothesis> {
        Hypothesis::ALL.iter().copied().find(|h| h.name() == name)
    }
}

/// Class predicate a scan filters through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    Any,
    Tree,
    Block,
    Median,
    Modular,
    DistanceHereditary,
    Antipodal,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 7] = [
        ClassFilter::Any,
        ClassFilter::Tree,
        ClassFilter::Block,
        ClassFilter::Median,
        ClassFilter::Modular,
        ClassFilter::DistanceHereditary,
        ClassFilter::Antipodal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::Any => "any",
            ClassFilter::Tree => "tree",
            ClassFilter::Block => "block",
            ClassFilter::Median => "median",
            ClassFilter::Modular => "modular",
            ClassFilter::DistanceHereditary => "distance_hereditary",
            ClassFilter::Antipodal => "antipodal",
        }
    }

    pub fn from_name(name: &str) -> Option<ClassFilter> {
        ClassFilter::ALL.iter().copied().find(|c| c.name() == name)
    }

    fn admits(self, g: &Graph, dm: &DistanceMatrix) -> bool {
        match self {
            ClassFilter::Any => true,
            ClassFilter::Tree => g.is_tree(),
            ClassFilter::Block => is_block_graph(g).unwrap_or(false),
            ClassFilter::Median => is_median(dm),
            ClassFilter::Modular => is_modular(dm),
            ClassFilter::DistanceHereditary => is_distance_hereditary(dm),
            ClassFilter::Antipodal => antipode_map(dm).expect("antipodes are unique").is_some(),
        }
    }
}

/// Witness falsifying a hypothesis on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisWitness {
    Triple([usize; 3]),
    Pair([usize; 2]),
    Vertex(usize),
}

impl HypothesisWitness {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            HypothesisWitness::Triple(t) => t.to_vec(),
            HypothesisWitness::Pair(p) => p.to_vec(),
            HypothesisWitness::Vertex(v) => vec![*v],
        }
    }
}

/// Outcome of one hypothesis on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisVerdict {
    pub holds: bool,
    pub witness: Option<HypothesisWitness>,
}

/// Checks one hypothesis, recomputing certificates from the matrix.
/// Extensions may reuse a vertex of the pair being extended, matching
/// the perimeter definition with repeated vertices; this only matters
/// on graphs of order below three.
pub fn check_hypothesis(dm: &DistanceMatrix, hypothesis: Hypothesis) -> HypothesisVerdict {
    let diam_cert = diameter(dm);
    let tri_cert = triameter_bruteforce(dm);
    check_with_certs(dm, &diam_cert, &tri_cert, hypothesis)
}

fn check_with_certs(
    dm: &DistanceMatrix,
    diam_cert: &DiametralCertificate,
    tri_cert: &TriametralCertificate,
    hypothesis: Hypothesis,
) -> HypothesisVerdict {
    let n = dm.n();
    let fail = |witness| HypothesisVerdict {
        holds: false,
        witness: Some(witness),
    };
    match hypothesis {
        Hypothesis::TriametralContainsDiametral => {
            for &[a, b, c] in &tri_cert.triples {
                let largest = dm.get(a, b).max(dm.get(a, c)).max(dm.get(b, c));
                if largest != diam_cert.value {
                    return fail(HypothesisWitness::Triple([a, b, c]));
                }
            }
        }
        Hypothesis::TriametralContainsPeripheral => {
            for &triple in &tri_cert.triples {
                if !triple.iter().any(|&v| diam_cert.peripheral.contains(v)) {
                    return fail(HypothesisWitness::Triple(triple));
                }
            }
        }
        Hypothesis::DiametralPairExtends => {
            for &(x, y) in &diam_cert.pairs {
                let best = (0..n)
                    .map(|z| diam_cert.value + dm.get(x, z) + dm.get(y, z))
                    .max()
                    .unwrap();
                if best != tri_cert.value {
                    return fail(HypothesisWitness::Pair([x, y]));
                }
            }
        }
        Hypothesis::PeripheralVertexExtends => {
            for u in diam_cert.peripheral.iter() {
                let mut best = 0;
                for v in 0..n {
                    let duv = dm.get(u, v);
                    for w in v..n {
                        let p = duv + dm.get(u, w) + dm.get(v, w);
                        if p > best {
                            best = p;
                        }
                    }
                }
                if best != tri_cert.value {
                    return fail(HypothesisWitness::Vertex(u));
                }
            }
        }
    }
    HypothesisVerdict {
        holds: true,
        witness: None,
    }
}

/// Labelling-independent identity of a graph: order, size, degree
/// multiset, and the multiset of pairwise distances. Used to match
/// scan output against known fixtures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub distances: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &Graph, dm: &DistanceMatrix) -> Fingerprint {
        let n = g.n();
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        let mut distances = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                distances.push(dm.get(u, v));
            }
        }
        distances.sort_unstable();
        Fingerprint {
            n,
            m: g.m(),
            degrees,
            distances,
        }
    }
}

/// One verified counterexample. `witness` holds the violating
/// triple/pair/vertex and `witness_distances` its pairwise distances.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub class: ClassProfile,
    pub hypothesis: Hypothesis,
    pub witness: Vec<usize>,
    pub verified: bool,
    pub open_question: bool,
    pub witness_distances: Vec<usize>,
    pub diameter: usize,
    pub triameter: usize,
    pub fingerprint: Fingerprint,
}

/// What to scan for.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub class_filter: ClassFilter,
    pub hypotheses: Vec<Hypothesis>,
}

impl ScanConfig {
    pub fn new(class_filter: ClassFilter, hypotheses: &[Hypothesis]) -> ScanConfig {
        let mut deduped = Vec::new();
        for &h in hypotheses {
            if !deduped.contains(&h) {
                deduped.push(h);
            }
        }
        ScanConfig {
            class_filter,
            hypotheses: deduped,
        }
    }
}

/// Counters emitted at the end of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    /// Connected graphs examined.
    pub scanned: u64,
    /// Graphs passing the class filter.
    pub in_class: u64,
    /// Reports emitted.
    pub violations: u64,
    pub by_hypothesis: BTreeMap<&'static str, u64>,
    pub open_question_reports: u64,
    /// Disconnected graph6 lines skipped (file sources only).
    pub skipped_disconnected: u64,
}

impl ScanSummary {
    fn new(cfg: &ScanConfig) -> ScanSummary {
        ScanSummary {
            scanned: 0,
            in_class: 0,
            violations: 0,
            by_hypothesis: cfg.hypotheses.iter().map(|h| (h.name(), 0)).collect(),
            open_question_reports: 0,
            skipped_disconnected: 0,
        }
    }

    fn absorb(&mut self, other: &ScanSummary) {
        self.scanned += other.scanned;
        self.in_class += other.in_class;
        self.violations += other.violations;
        for (k, v) in &other.by_hypothesis {
            *self.by_hypothesis.entry(k).or_insert(0) += v;
        }
        self.open_question_reports += other.open_question_reports;
        self.skipped_disconnected += other.skipped_disconnected;
    }
}

/// Reports plus the final summary.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub reports: Vec<CounterexampleReport>,
    pub summary: ScanSummary,
}

/// Iterator over all connected labelled graphs on `n` vertices, in
/// ascending edge-subset order. Every connected labelled graph appears
/// exactly once; isomorphic relabellings are not collapsed.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, ExplorerError> {
    check_order(n)?;
    let end = 1u64 << (n * (n - 1) / 2);
    Ok((0..end).filter_map(move |mask| graph_from_mask(n, mask)))
}

fn check_order(n: usize) -> Result<(), ExplorerError> {
    if n == 0 {
        return Err(ExplorerError::EmptyOrder);
    }
    if n > MAX_ENUM_ORDER {
        return Err(ExplorerError::TooLarge {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    Ok(())
}

/// Applies `f` to every connected labelled graph on `n` vertices,
/// sharded across threads. Unlike [`enumerate_connected`] the
/// visitation order is unspecified, so `f` must be a pure per-graph
/// check.
pub fn par_for_each_connected<F>(n: usize, f: F) -> Result<(), ExplorerError>
where
    F: Fn(&Graph) + Sync,
{
    check_order(n)?;
    let total = 1u64 << (n * (n - 1) / 2);
    let chunk = 1u64 << 14;
    (0..total.div_ceil(chunk)).into_par_iter().for_each(|c| {
        let start = c * chunk;
        let end = total.min(start + chunk);
        for mask in start..end {
            if let Some(g) = graph_from_mask(n, mask) {
                f(&g);
            }
        }
    });
    Ok(())
}

/// Decodes an edge-subset counter into a graph, or `None` if the graph
/// is disconnected. Bit k of the mask is edge k in the column-major
/// upper-triangle order (0,1), (0,2), (1,2), (0,3), ...
fn graph_from_mask(n: usize, mask: u64) -> Option<Graph> {
    debug_assert!(n <= MAX_ENUM_ORDER);
    let mut adj = [0u8; MAX_ENUM_ORDER];
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let full = (1u8 << n) - 1;
    let mut reach = 1u8;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    if reach != full {
        return None;
    }
    Some(Graph::from_edge_list(n, &edges).expect("mask encodes a valid graph"))
}

/// Scans every connected labelled graph with `min_n <= n <= max_n`
/// from the built-in enumerator.
pub fn scan_range(
    min_n: usize,
    max_n: usize,
    cfg: &ScanConfig,
) -> Result<ScanOutcome, ExplorerError> {
    if min_n == 0 {
        return Err(ExplorerError::EmptyOrder);
    }
    check_order(max_n)?;
    let mut reports = Vec::new();
    let mut summary = ScanSummary::new(cfg);
    for n in min_n..=max_n {
        let total = 1u64 << (n * (n - 1) / 2);
        let chunk = 1u64 << 14;
        let chunks = total.div_ceil(chunk);
        let partials: Result<Vec<(Vec<CounterexampleReport>, ScanSummary)>, ExplorerError> = (0
            ..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * chunk;
                let end = total.min(start + chunk);
                let mut local_reports = Vec::new();
                let mut local = ScanSummary::new(cfg);
                for mask in start..end {
                    if let Some(g) = graph_from_mask(n, mask) {
                        examine(&g, cfg, &mut local, &mut local_reports)?;
                    }
                }
                Ok((local_reports, local))
            })
            .collect();
        for (mut local_reports, local) in partials? {
            reports.append(&mut local_reports);
            summary.absorb(&local);
        }
    }
    summary.violations = reports.len() as u64;
    Ok(ScanOutcome { reports, summary })
}

/// Scans graphs from graph6 lines (blank lines are ignored).
/// Disconnected graphs are skipped and counted; malformed lines abort
/// the scan with their line number.
pub fn scan_graph6_lines<I>(lines: I, cfg: &ScanConfig) -> Result<ScanOutcome, ExplorerError>
where
    I: IntoIterator<Item = String>,
{
    let mut reports = Vec::new();
    let mut summary = ScanSummary::new(cfg);
    for (idx, line) in lines.into_iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(&line).map_err(|source| ExplorerError::SourceParse {
            line: idx + 1,
            source,
        })?;
        if !g.is_connected() {
            summary.skipped_disconnected += 1;
            continue;
        }
        examine(&g, cfg, &mut summary, &mut reports)?;
    }
    summary.violations = reports.len() as u64;
    Ok(ScanOutcome { reports, summary })
}

/// Checks one connected graph, appending a verified report per failed
/// hypothesis.
fn examine(
    g: &Graph,
    cfg: &ScanConfig,
    summary: &mut ScanSummary,
    reports: &mut Vec<CounterexampleReport>,
) -> Result<(), ExplorerError> {
    summary.scanned += 1;
    let dm = g.distance_matrix().expect("caller ensures connectivity");
    if !cfg.class_filter.admits(g, &dm) {
        return Ok(());
    }
    summary.in_class += 1;

    let diam_cert = diameter(&dm);
    let tri_cert = triameter_bruteforce(&dm);
    let mut failures: Vec<(Hypothesis, HypothesisWitness)> = Vec::new();
    for &h in &cfg.hypotheses {
        let verdict = check_with_certs(&dm, &diam_cert, &tri_cert, h);
        if !verdict.holds {
            failures.push((h, verdict.witness.expect("failure carries a witness")));
        }
    }
    if failures.is_empty() {
        return Ok(());
    }

    let failed: Vec<Hypothesis> = failures.iter().map(|&(h, _)| h).collect();
    let graph6 = write_graph6(g);
    let class = classify_with_matrix(g, &dm);
    let fingerprint = Fingerprint::of(g, &dm);
    for (hypothesis, witness) in failures {
        if !verify_counterexample(&graph6, hypothesis, &witness) {
            return Err(ExplorerError::VerificationFailed {
                graph6: graph6.clone(),
                hypothesis,
            });
        }
        let open_question = open_question_evidence(cfg.class_filter, hypothesis, &failed);
        let vs = witness.vertices();
        let mut witness_distances = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                witness_distances.push(dm.get(vs[i], vs[j]));
            }
        }
        summary.open_question_reports += u64::from(open_question);
        *summary.by_hypothesis.entry(hypothesis.name()).or_insert(0) += 1;
        reports.push(CounterexampleReport {
            graph6: graph6.clone(),
            n: g.n(),
            m: g.m(),
            class: class.clone(),
            hypothesis,
            witness: vs,
            verified: true,
            open_question,
            witness_distances,
            diameter: diam_cert.value,
            triameter: tri_cert.value,
            fingerprint: fingerprint.clone(),
        });
    }
    Ok(())
}

/// Whether a report is evidence bearing on a question that is open:
/// q3prime/q4 on median graphs, and for distance-hereditary graphs a
/// joint failure of q3prime and q4 on the same graph (each failing
/// alone is already a known counterexample).
fn open_question_evidence(
    filter: ClassFilter,
    hypothesis: Hypothesis,
    failed: &[Hypothesis],
) -> bool {
    let relevant = matches!(
        hypothesis,
        Hypothesis::TriametralContainsPeripheral | Hypothesis::DiametralPairExtends
    );
    match filter {
        ClassFilter::Median => relevant,
        ClassFilter::DistanceHereditary => {
            relevant
                && failed.contains(&Hypothesis::TriametralContainsPeripheral)
                && failed.contains(&Hypothesis::DiametralPairExtends)
        }
        _ => false,
    }
}

/// Re-derives everything from the serialized graph and confirms the
/// witness falsifies the hypothesis. No state from the scan is reused.
fn verify_counterexample(
    graph6: &str,
    hypothesis: Hypothesis,
    witness: &HypothesisWitness,
) -> bool {
    let Ok(g) = parse_graph6(graph6) else {
        return false;
    };
    let Ok(dm) = g.distance_matrix() else {
        return false;
    };
    let diam_cert = diameter(&dm);
    let tri_cert = triameter_bruteforce(&dm);
    let n = dm.n();
    match (hypothesis, witness) {
        (Hypothesis::TriametralContainsDiametral, HypothesisWitness::Triple([a, b, c])) => {
            let (a, b, c) = (*a, *b, *c);
            let perimeter = dm.get(a, b) + dm.get(a, c) + dm.get(b, c);
            let largest = dm.get(a, b).max(dm.get(a, c)).max(dm.get(b, c));
            perimeter == tri_cert.value && largest != diam_cert.value
        }
        (Hypothesis::TriametralContainsPeripheral, HypothesisWitness::Triple([a, b, c])) => {
            let (a, b, c) = (*a, *b, *c);
            let perimeter = dm.get(a, b) + dm.get(a, c) + dm.get(b, c);
            perimeter == tri_cert.value
                && ![a, b, c].iter().any(|&v| diam_cert.peripheral.contains(v))
        }
        (Hypothesis::DiametralPairExtends, HypothesisWitness::Pair([x, y])) => {
            let (x, y) = (*x, *y);
            let best = (0..n)
                .map(|z| dm.get(x, y) + dm.get(x, z) + dm.get(y, z))
                .max()
                .unwrap();
            dm.get(x, y) == diam_cert.value && best < tri_cert.value
        }
        (Hypothesis::PeripheralVertexExtends, HypothesisWitness::Vertex(u)) => {
            let u = *u;
            if !diam_cert.peripheral.contains(u) {
                return false;
            }
            let mut best = 0;
            for v in 0..n {
                for w in v..n {
                    best = best.max(dm.get(u, v) + dm.get(u, w) + dm.get(v, w));
                }
            }
            best < tri_cert.value
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, fixture, FamilySpec};

    fn dm(g: &Graph) -> DistanceMatrix {
        g.distance_matrix().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected(1).unwrap().count(), 1);
        assert_eq!(enumerate_connected(2).unwrap().count(), 1);
        assert_eq!(enumerate_connected(3).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4).unwrap().count(), 38);
        assert_eq!(enumerate_connected(5).unwrap().count(), 728);
    }

    #[test]
    fn enumeration_rejects_bad_orders() {
        assert!(matches!(
            enumerate_connected(0),
            Err(ExplorerError::EmptyOrder)
        ));
        assert!(matches!(
            enumerate_connected(8),
            Err(ExplorerError::TooLarge { n: 8, max: 7 })
        ));
    }

    #[test]
    fn theta_fixture_fails_q3_and_q4() {
        let fx = fixture("fig2_theta").unwrap();
        let dm = dm(&fx.graph);
        let v = check_hypothesis(&dm, Hypothesis::TriametralContainsDiametral);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(HypothesisWitness::Triple([2, 7, 10])));

        let v = check_hypothesis(&dm, Hypothesis::DiametralPairExtends);
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(HypothesisWitness::Pair([fx.label("x"), fx.label("y")]))
        );
    }

    #[test]
    fn cube_fails_q3_with_equilateral_triple() {
        let q3 = build(&FamilySpec::hypercube(3)).unwrap();
        let dm = dm(&q3);
        let v = check_hypothesis(&dm, Hypothesis::TriametralContainsDiametral);
        assert!(!v.holds);
        let Some(HypothesisWitness::Triple([a, b, c])) = v.witness else {
            panic!("expected a triple witness");
        };
        assert_eq!(dm.get(a, b), 2);
        assert_eq!(dm.get(a, c), 2);
        assert_eq!(dm.get(b, c), 2);
    }

    #[test]
    fn median_fixture_fails_q3_but_not_q3prime() {
        let fx = fixture("fig4_median").unwrap();
        let dm = dm(&fx.graph);
        let v = check_hypothesis(&dm, Hypothesis::TriametralContainsDiametral);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(HypothesisWitness::Triple([0, 2, 3])));
        assert!(check_hypothesis(&dm, Hypothesis::TriametralContainsPeripheral).holds);
    }

    #[test]
    fn trivial_orders_hold_everything() {
        for g in [
            Graph::from_edge_list(1, &[]).unwrap(),
            Graph::from_edge_list(2, &[(0, 1)]).unwrap(),
        ] {
            let dm = dm(&g);
            for h in Hypothesis::ALL {
                assert!(check_hypothesis(&dm, h).holds, "{h:?} on {g:?}");
            }
        }
    }

    #[test]
    fn scan_finds_k23_as_modular_q4prime_counterexample() {
        let cfg = ScanConfig::new(ClassFilter::Modular, &[Hypothesis::PeripheralVertexExtends]);
        let outcome = scan_range(1, 5, &cfg).unwrap();
        let k23 = build(&FamilySpec::complete_bipartite(2, 3)).unwrap();
        let fp = Fingerprint::of(&k23, &dm(&k23));
        assert!(outcome.reports.iter().any(|r| r.fingerprint == fp));
        assert!(outcome.reports.iter().all(|r| r.verified));
        assert_eq!(outcome.summary.violations, outcome.reports.len() as u64);
    }

    #[test]
    fn scan_summary_counts_are_consistent() {
        let cfg = ScanConfig::new(ClassFilter::Tree, &Hypothesis::ALL);
        let outcome = scan_range(1, 5, &cfg).unwrap();
        assert_eq!(outcome.summary.scanned, 1 + 1 + 4 + 38 + 728);
        // labelled trees on n vertices: n^(n-2)
        assert_eq!(outcome.summary.in_class, 1 + 1 + 3 + 16 + 125);
    }

    #[test]
    fn scan_range_validates_orders() {
        let cfg = ScanConfig::new(ClassFilter::Any, &Hypothesis::ALL);
        assert!(matches!(
            scan_range(0, 3, &cfg),
            Err(ExplorerError::EmptyOrder)
        ));
        assert!(matches!(
            scan_range(1, 9, &cfg),
            Err(ExplorerError::TooLarge { .. })
        ));
        // an inverted range scans nothing
        let outcome = scan_range(4, 3, &cfg).unwrap();
        assert_eq!(outcome.summary.scanned, 0);
        assert!(outcome.reports.is_empty());
    }

    #[test]
    fn scan_order_is_deterministic() {
        let cfg = ScanConfig::new(ClassFilter::Any, &Hypothesis::ALL);
        let a = scan_range(1, 5, &cfg).unwrap();
        let b = scan_range(1, 5, &cfg).unwrap();
        let key = |o: &ScanOutcome| -> Vec<(String, Hypothesis)> {
            o.reports
                .iter()
                .map(|r| (r.graph6.clone(), r.hypothesis))
                .collect()
        };
        assert_eq!(key(&a), key(&b));
        assert_eq!(a.summary, b.summary);
    }

    #[test]
    fn scan_lines_reports_parse_errors_with_line_numbers() {
        let cfg = ScanConfig::new(ClassFilter::Any, &Hypothesis::ALL);
        let lines = vec!["Bw".to_string(), "B w".to_string()];
        match scan_graph6_lines(lines, &cfg) {
            Err(ExplorerError::SourceParse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scan_lines_skips_disconnected() {
        let cfg = ScanConfig::new(ClassFilter::Any, &Hypothesis::ALL);
        // "A?" is the edgeless graph on two vertices
        let lines = vec!["A?".to_string(), "A_".to_string()];
        let outcome = scan_graph6_lines(lines, &cfg).unwrap();
        assert_eq!(outcome.summary.skipped_disconnected, 1);
        assert_eq!(outcome.summary.scanned, 1);
    }

    #[test]
    fn implications_between_hypotheses() {
        // q3 implies q3prime and q4 implies q4prime on every graph.
        for g in enumerate_connected(4).unwrap() {
            let dm = dm(&g);
            let q3 = check_hypothesis(&dm, Hypothesis::TriametralContainsDiametral).holds;
            let q3p = check_hypothesis(&dm, Hypothesis::TriametralContainsPeripheral).holds;
            let q4 = check_hypothesis(&dm, Hypothesis::DiametralPairExtends).holds;
            let q4p = check_hypothesis(&dm, Hypothesis::PeripheralVertexExtends).holds;
            assert!(!q3 || q3p);
            assert!(!q4 || q4p);
        }
    }

    #[test]
    fn report_serializes_to_documented_schema() {
        let cfg = ScanConfig::new(ClassFilter::Modular, &[Hypothesis::PeripheralVertexExtends]);
        let outcome = scan_range(5, 5, &cfg).unwrap();
        let report = &outcome.reports[0];
        let json = serde_json::to_value(report).unwrap();
        assert!(json["graph6"].is_string());
        assert!(json["n"].is_u64());
        assert!(json["m"].is_u64());
        assert!(json["class"]["modular"].as_bool().unwrap());
        assert_eq!(json["hypothesis"], "q4prime");
        assert!(json["witness"].is_array());
        assert_eq!(json["verified"], true);
        assert!(json["open_question"].is_boolean());
    }
}
