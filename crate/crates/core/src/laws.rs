//! The law catalog: every quantitative relation the crate certifies,
//! evaluated against computed certificates.
//!
//! A law with a class precondition never skips silently: an input that
//! fails the precondition yields [`LawsError::PreconditionFailed`],
//! which callers distinguish from a verdict with `holds = false`.

use serde::Serialize;
use thiserror::Error;

use crate::classes::{antipode_map, is_block_graph};
use crate::families::{build, cartesian_product, FamilySpec};
use crate::graph::{DistanceMatrix, Graph};
use crate::metrics::{diameter, triameter_antipodal, triameter_bruteforce};

/// Validated parameters of a tree bound: order `n >= 4` and leaf count
/// `3 <= l <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeParams {
    n: usize,
    l: usize,
}

impl TreeParams {
    pub fn new(n: usize, l: usize) -> Result<TreeParams, LawsError> {
        if n < 4 || l < 3 || l > n - 1 {
            return Err(LawsError::BadParams { n, l });
        }
        Ok(TreeParams { n, l })
    }

    pub fn order(self) -> usize {
        self.n
    }

    pub fn leaf_count(self) -> usize {
        self.l
    }

    /// (n - 1) mod l.
    pub fn remainder(self) -> usize {
        (self.n - 1) % self.l
    }
}

/// The tight lower bound for the triameter of a tree with the given
/// order and leaf count: `6 * floor((n-1)/l) + 2 * min((n-1) mod l, 3)`.
pub fn tree_bound_optimal(p: TreeParams) -> usize {
    6 * ((p.n - 1) / p.l) + 2 * p.remainder().min(3)
}

/// The earlier baseline bound `ceil(4(n-1)/(l-1))`. Only the formula is
/// evaluated here; it needs `l >= 2`.
pub fn tree_bound_baseline(n: usize, l: usize) -> Result<usize, LawsError> {
    if n == 0 || l < 2 {
        return Err(LawsError::BadParams { n, l });
    }
    Ok((4 * (n - 1)).div_ceil(l - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    GirthBound,
    DiamSandwich,
    AntipodalTriameter,
    HypercubeTriameter,
    CartesianAdditivity,
    AntipodalExtension,
    TreeBoundOptimal,
    TreeBoundBaseline,
    BlockTripleContainsDiametral,
    BlockPairExtends,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::GirthBound,
        Law::DiamSandwich,
        Law::AntipodalTriameter,
        Law::HypercubeTriameter,
        Law::CartesianAdditivity,
        Law::AntipodalExtension,
        Law::TreeBoundOptimal,
        Law::TreeBoundBaseline,
        Law::BlockTripleContainsDiametral,
        Law::BlockPairExtends,
    ];

    /// Stable CLI-facing identifier.
    pub fn name(self) -> &'static str {
        match self {
            Law::GirthBound => "girth_bound",
            Law::DiamSandwich => "diam_sandwich",
            Law::AntipodalTriameter => "antipodal_triameter",
            Law::HypercubeTriameter => "hypercube_triameter",
            Law::CartesianAdditivity => "cartesian_additivity",
            Law::AntipodalExtension => "antipodal_extension",
            Law::TreeBoundOptimal => "tree_bound_optimal",
            Law::TreeBoundBaseline => "tree_bound_baseline",
            Law::BlockTripleContainsDiametral => "block_triple_contains_diametral",
            Law::BlockPairExtends => "block_pair_extends",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        Law::ALL.iter().copied().find(|l| l.name() == name)
    }

    /// What [`check_law`] expects as input.
    pub fn input_kind(self) -> InputKind {
        match self {
            Law::CartesianAdditivity => InputKind::TwoGraphs,
            Law::HypercubeTriameter => InputKind::Dimension,
            _ => InputKind::Graph,
        }
    }
}

impl std::fmt::Display for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Graph,
    TwoGraphs,
    Dimension,
}

impl InputKind {
    pub fn describe(self) -> &'static str {
        match self {
            InputKind::Graph => "one graph",
            InputKind::TwoGraphs => "two graphs",
            InputKind::Dimension => "a dimension parameter",
        }
    }
}

/// Input to [`check_law`].
pub enum LawInput<'a> {
    Graph(&'a Graph),
    TwoGraphs(&'a Graph, &'a Graph),
    Dimension(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LawsError {
    #[error("{law}: precondition failed: {reason}")]
    PreconditionFailed { law: Law, reason: String },
    #[error(
        "tree bound parameters need n >= 4 and 3 <= l <= n-1 (baseline: l >= 2), got n={n}, l={l}"
    )]
    BadParams { n: usize, l: usize },
    #[error("{law} expects {expected} as input")]
    WrongInput { law: Law, expected: &'static str },
}

/// Certificate fragment attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LawWitness {
    Triple {
        vertices: [usize; 3],
        perimeter: usize,
    },
    Pair {
        vertices: [usize; 2],
        distance: usize,
    },
    Triameter {
        value: usize,
        triple: [usize; 3],
    },
}

/// Outcome of checking one law on one input: the compared quantities
/// and, on failure (or for the sandwich law, always), a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawVerdict {
    pub law: Law,
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LawWitness>,
}

fn precondition(law: Law, reason: &str) -> LawsError {
    LawsError::PreconditionFailed {
        law,
        reason: reason.to_string(),
    }
}

fn connected_matrix(law: Law, g: &Graph) -> Result<DistanceMatrix, LawsError> {
    g.distance_matrix()
        .map_err(|e| precondition(law, &e.to_string()))
}

/// Dispatches a law over its input. See the `check_*` functions for
/// the individual contracts.
pub fn check_law(law: Law, input: LawInput<'_>) -> Result<LawVerdict, LawsError> {
    match (law, input) {
        (Law::GirthBound, LawInput::Graph(g)) => check_girth_bound(g),
        (Law::DiamSandwich, LawInput::Graph(g)) => check_diam_sandwich(g),
        (Law::AntipodalTriameter, LawInput::Graph(g)) => check_antipodal_triameter(g),
        (Law::HypercubeTriameter, LawInput::Dimension(dim)) => check_hypercube_triameter(dim),
        (Law::CartesianAdditivity, LawInput::TwoGraphs(g, h)) => check_cartesian_additivity(g, h),
        (Law::AntipodalExtension, LawInput::Graph(g)) => check_antipodal_extension(g),
        (Law::TreeBoundOptimal, LawInput::Graph(g)) => check_tree_bound_optimal(g),
        (Law::TreeBoundBaseline, LawInput::Graph(g)) => check_tree_bound_baseline(g),
        (Law::BlockTripleContainsDiametral, LawInput::Graph(g)) => {
            check_block_triple_contains_diametral(g)
        }
        (Law::BlockPairExtends, LawInput::Graph(g)) => check_block_pair_extends(g),
        (law, _) => Err(LawsError::WrongInput {
            law,
            expected: law.input_kind().describe(),
        }),
    }
}

/// triameter >= girth; vacuously true on acyclic graphs (rhs 0).
pub fn check_girth_bound(g: &Graph) -> Result<LawVerdict, LawsError> {
    let dm = connected_matrix(Law::GirthBound, g)?;
    let tr = triameter_bruteforce(&dm).value;
    let girth = g.girth();
    Ok(LawVerdict {
        law: Law::GirthBound,
        holds: girth.is_none_or(|girth| tr >= girth),
        lhs: tr as i64,
        rhs: girth.unwrap_or(0) as i64,
        witness: None,
    })
}

/// 2 diam <= tr <= 3 diam. Lhs and rhs are the two ends of the
/// sandwich; the measured triameter rides along as the witness.
pub fn check_diam_sandwich(g: &Graph) -> Result<LawVerdict, LawsError> {
    let dm = connected_matrix(Law::DiamSandwich, g)?;
    let diam = diameter(&dm).value;
    let cert = triameter_bruteforce(&dm);
    let triple = cert.triples.first().copied().unwrap_or([0, 0, 0]);
    Ok(LawVerdict {
        law: Law::DiamSandwich,
        holds: 2 * diam <= cert.value && cert.value <= 3 * diam,
        lhs: (2 * diam) as i64,
        rhs: (3 * diam) as i64,
        witness: Some(LawWitness::Triameter {
            value: cert.value,
            triple,
        }),
    })
}

/// tr = 2 diam on antipodal graphs.
pub fn check_antipodal_triameter(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::AntipodalTriameter;
    let dm = connected_matrix(law, g)?;
    let map = antipode_map(&dm)
        .expect("antipodes are unique")
        .ok_or_else(|| precondition(law, "graph is not antipodal"))?;
    let brute = triameter_bruteforce(&dm);
    let fast = triameter_antipodal(&dm, &map).expect("map was just computed");
    Ok(LawVerdict {
        law,
        holds: brute.value == fast.value,
        lhs: brute.value as i64,
        rhs: fast.value as i64,
        witness: brute.triples.first().map(|&t| LawWitness::Triple {
            vertices: t,
            perimeter: brute.value,
        }),
    })
}

/// tr(Q_dim) = 2 dim, computed through the antipodal formula (and by
/// brute force too when the cube is small enough to enumerate fast).
pub fn check_hypercube_triameter(dim: usize) -> Result<LawVerdict, LawsError> {
    let law = Law::HypercubeTriameter;
    if dim == 0 {
        return Err(precondition(law, "dimension must be at least 1"));
    }
    let cube = build(&FamilySpec::hypercube(dim)).map_err(|e| precondition(law, &e.to_string()))?;
    let dm = connected_matrix(law, &cube)?;
    let map = antipode_map(&dm)
        .expect("antipodes are unique")
        .expect("hypercubes are antipodal");
    let fast = triameter_antipodal(&dm, &map).expect("map is valid");
    let mut holds = fast.value == 2 * dim;
    if dim <= 5 {
        holds &= triameter_bruteforce(&dm).value == fast.value;
    }
    Ok(LawVerdict {
        law,
        holds,
        lhs: fast.value as i64,
        rhs: (2 * dim) as i64,
        witness: None,
    })
}

/// tr(G box H) = tr(G) + tr(H).
pub fn check_cartesian_additivity(g: &Graph, h: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::CartesianAdditivity;
    let product = cartesian_product(g, h).map_err(|e| precondition(law, &e.to_string()))?;
    let dm_g = connected_matrix(law, g)?;
    let dm_h = connected_matrix(law, h)?;
    let dm_p = connected_matrix(law, &product)?;
    let lhs = triameter_bruteforce(&dm_p);
    let rhs = triameter_bruteforce(&dm_g).value + triameter_bruteforce(&dm_h).value;
    Ok(LawVerdict {
        law,
        holds: lhs.value == rhs,
        lhs: lhs.value as i64,
        rhs: rhs as i64,
        witness: lhs.triples.first().map(|&t| LawWitness::Triple {
            vertices: t,
            perimeter: lhs.value,
        }),
    })
}

/// On an antipodal graph every vertex pair extends to a triametral
/// triple. Lhs is the worst pair's best extension, rhs the triameter.
pub fn check_antipodal_extension(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::AntipodalExtension;
    let dm = connected_matrix(law, g)?;
    antipode_map(&dm)
        .expect("antipodes are unique")
        .ok_or_else(|| precondition(law, "graph is not antipodal"))?;
    let tr = triameter_bruteforce(&dm).value;
    let n = dm.n();
    let mut worst = usize::MAX;
    let mut witness = None;
    for u in 0..n {
        for v in u..n {
            let best = (0..n)
                .map(|z| dm.get(u, v) + dm.get(u, z) + dm.get(v, z))
                .max()
                .unwrap();
            if best < worst {
                worst = best;
                witness = Some([u, v]);
            }
        }
    }
    let holds = worst == tr;
    Ok(LawVerdict {
        law,
        holds,
        lhs: worst as i64,
        rhs: tr as i64,
        witness: if holds {
            None
        } else {
            witness.map(|vertices| LawWitness::Pair {
                vertices,
                distance: dm.get(vertices[0], vertices[1]),
            })
        },
    })
}

fn tree_shape(law: Law, g: &Graph) -> Result<(usize, usize, DistanceMatrix), LawsError> {
    let dm = connected_matrix(law, g)?;
    if !g.is_tree() {
        return Err(precondition(law, "input is not a tree"));
    }
    Ok((g.n(), g.leaves().len(), dm))
}

/// Brute-force triameter of a tree is at least the optimal bound.
pub fn check_tree_bound_optimal(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::TreeBoundOptimal;
    let (n, l, dm) = tree_shape(law, g)?;
    let params = TreeParams::new(n, l).map_err(|e| precondition(law, &e.to_string()))?;
    let tr = triameter_bruteforce(&dm).value;
    let bound = tree_bound_optimal(params);
    Ok(LawVerdict {
        law,
        holds: tr >= bound,
        lhs: tr as i64,
        rhs: bound as i64,
        witness: None,
    })
}

/// Brute-force triameter of a tree is at least the baseline bound.
/// Requires at least three leaves; on a bare path the baseline formula
/// exceeds the triameter and is not a valid bound.
pub fn check_tree_bound_baseline(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::TreeBoundBaseline;
    let (n, l, dm) = tree_shape(law, g)?;
    if l < 3 {
        return Err(precondition(law, "tree must have at least 3 leaves"));
    }
    let tr = triameter_bruteforce(&dm).value;
    let bound = tree_bound_baseline(n, l).expect("l >= 3");
    Ok(LawVerdict {
        law,
        holds: tr >= bound,
        lhs: tr as i64,
        rhs: bound as i64,
        witness: None,
    })
}

fn require_block(law: Law, g: &Graph) -> Result<DistanceMatrix, LawsError> {
    let dm = connected_matrix(law, g)?;
    if !is_block_graph(g).expect("connected") {
        return Err(precondition(law, "graph is not a block graph"));
    }
    Ok(dm)
}

/// In a block graph, every triametral triple contains a diametral
/// pair: the minimum over triametral triples of their largest pairwise
/// distance equals the diameter.
pub fn check_block_triple_contains_diametral(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::BlockTripleContainsDiametral;
    let dm = require_block(law, g)?;
    let diam = diameter(&dm).value;
    let cert = triameter_bruteforce(&dm);
    let mut lhs = diam;
    let mut witness = None;
    for &[a, b, c] in &cert.triples {
        let largest = dm.get(a, b).max(dm.get(a, c)).max(dm.get(b, c));
        if largest < lhs {
            lhs = largest;
            witness = Some(LawWitness::Triple {
                vertices: [a, b, c],
                perimeter: cert.value,
            });
        }
    }
    Ok(LawVerdict {
        law,
        holds: lhs == diam,
        lhs: lhs as i64,
        rhs: diam as i64,
        witness,
    })
}

/// In a block graph, every diametral pair extends to a triametral
/// triple: the minimum over diametral pairs of their best extension
/// equals the triameter.
pub fn check_block_pair_extends(g: &Graph) -> Result<LawVerdict, LawsError> {
    let law = Law::BlockPairExtends;
    let dm = require_block(law, g)?;
    let tr = triameter_bruteforce(&dm).value;
    let cert = diameter(&dm);
    let n = dm.n();
    let mut lhs = tr;
    let mut witness = None;
    for &(x, y) in &cert.pairs {
        let best = (0..n)
            .map(|z| cert.value + dm.get(x, z) + dm.get(y, z))
            .max()
            .unwrap();
        if best < lhs {
            lhs = best;
            witness = Some(LawWitness::Pair {
                vertices: [x, y],
                distance: cert.value,
            });
        }
    }
    Ok(LawVerdict {
        law,
        holds: lhs == tr,
        lhs: lhs as i64,
        rhs: tr as i64,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{extremal_tree, fixture, tree_from_pruefer};

    #[test]
    fn optimal_bound_values() {
        assert_eq!(tree_bound_optimal(TreeParams::new(4, 3).unwrap()), 6);
        assert_eq!(tree_bound_optimal(TreeParams::new(10, 4).unwrap()), 14);
        assert_eq!(tree_bound_optimal(TreeParams::new(6, 4).unwrap()), 8);
        assert!(TreeParams::new(3, 3).is_err());
        assert!(TreeParams::new(10, 2).is_err());
    }

    #[test]
    fn baseline_bound_values() {
        assert_eq!(tree_bound_baseline(10, 4).unwrap(), 12);
        assert_eq!(tree_bound_baseline(4, 3).unwrap(), 6);
        assert_eq!(tree_bound_baseline(7, 3).unwrap(), 12);
        assert!(tree_bound_baseline(5, 1).is_err());
    }

    #[test]
    fn optimal_bound_dominates_baseline_on_the_full_grid() {
        // both lower-bound the extremal tree and the optimal bound
        // attains it, so dominance is forced
        for n in 4..=200 {
            for l in 3..n {
                let optimal = tree_bound_optimal(TreeParams::new(n, l).unwrap());
                let baseline = tree_bound_baseline(n, l).unwrap();
                assert!(optimal >= baseline, "({n},{l}): {optimal} < {baseline}");
            }
        }
    }

    #[test]
    fn sandwich_on_theta_fixture() {
        let fx = fixture("fig2_theta").unwrap();
        let v = check_diam_sandwich(&fx.graph).unwrap();
        assert!(v.holds);
        assert_eq!((v.lhs, v.rhs), (10, 15));
        match v.witness {
            Some(LawWitness::Triameter { value: 12, .. }) => {}
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn hypercube_law() {
        let v = check_hypercube_triameter(5).unwrap();
        assert!(v.holds);
        assert_eq!((v.lhs, v.rhs), (10, 10));
        assert!(check_hypercube_triameter(0).is_err());
    }

    #[test]
    fn tree_bounds_on_a_random_tree() {
        // 20 vertices, 5 leaves
        let t = extremal_tree(20, 5).unwrap();
        let v = check_tree_bound_optimal(&t).unwrap();
        assert!(v.holds);
        assert!(v.lhs >= v.rhs);
        let v = check_tree_bound_baseline(&t).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn baseline_law_rejects_paths() {
        let path = tree_from_pruefer(&[1, 2]).unwrap();
        assert!(matches!(
            check_tree_bound_baseline(&path),
            Err(LawsError::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn block_laws_accept_trees_and_reject_cycles() {
        let t = extremal_tree(12, 4).unwrap();
        assert!(check_block_triple_contains_diametral(&t).unwrap().holds);
        assert!(check_block_pair_extends(&t).unwrap().holds);

        let fx = fixture("fig2_theta").unwrap();
        assert!(matches!(
            check_block_pair_extends(&fx.graph),
            Err(LawsError::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn additivity_on_small_products() {
        let p3 = build(&FamilySpec::path(3)).unwrap();
        let v = check_cartesian_additivity(&p3, &p3).unwrap();
        assert!(v.holds);
        assert_eq!((v.lhs, v.rhs), (8, 8));
    }

    #[test]
    fn additivity_precondition() {
        let p3 = build(&FamilySpec::path(3)).unwrap();
        let disc = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            check_cartesian_additivity(&p3, &disc),
            Err(LawsError::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn girth_bound_is_vacuous_on_trees() {
        let t = extremal_tree(8, 3).unwrap();
        let v = check_girth_bound(&t).unwrap();
        assert!(v.holds);
        assert_eq!(v.rhs, 0);
        let c5 = build(&FamilySpec::cycle(5)).unwrap();
        let v = check_girth_bound(&c5).unwrap();
        assert!(v.holds);
        assert_eq!(v.rhs, 5);
    }

    #[test]
    fn antipodal_laws() {
        let c8 = build(&FamilySpec::cycle(8)).unwrap();
        assert!(check_antipodal_triameter(&c8).unwrap().holds);
        assert!(check_antipodal_extension(&c8).unwrap().holds);
        let p3 = build(&FamilySpec::path(3)).unwrap();
        assert!(matches!(
            check_antipodal_triameter(&p3),
            Err(LawsError::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn every_pair_extends_on_cubes_and_even_cycles() {
        for dim in 1..=5 {
            let cube = build(&FamilySpec::hypercube(dim)).unwrap();
            assert!(check_antipodal_extension(&cube).unwrap().holds, "Q{dim}");
        }
        for k in 2..=6 {
            let cycle = build(&FamilySpec::cycle(2 * k)).unwrap();
            assert!(
                check_antipodal_extension(&cycle).unwrap().holds,
                "C{}",
                2 * k
            );
        }
    }

    #[test]
    fn dispatcher_validates_input_kind() {
        let p3 = build(&FamilySpec::path(3)).unwrap();
        assert!(matches!(
            check_law(Law::HypercubeTriameter, LawInput::Graph(&p3)),
            Err(LawsError::WrongInput { .. })
        ));
        assert!(
            check_law(Law::DiamSandwich, LawInput::Graph(&p3))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn law_names_round_trip() {
        for law in Law::ALL {
            assert_eq!(Law::from_name(law.name()), Some(law));
        }
        assert_eq!(Law::from_name("nope"), None);
    }

    #[test]
    fn verdict_serializes_with_law_name() {
        let fx = fixture("fig2_theta").unwrap();
        let v = check_diam_sandwich(&fx.graph).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["law"], "diam_sandwich");
        assert_eq!(json["holds"], true);
        assert_eq!(json["lhs"], 10);
        assert_eq!(json["rhs"], 15);
    }
}
