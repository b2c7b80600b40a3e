//! Distance invariants for small connected graphs: diameter and
//! triameter certificates, recognizers for the metric graph classes
//! they interact with (trees, block, median, modular,
//! distance-hereditary, antipodal), deterministic constructors for the
//! standard families and extremal trees, an executable catalog of the
//! quantitative laws relating these invariants, and an exhaustive
//! small-graph explorer that hunts for counterexamples to the open
//! hypothesis schemata.
//!
//! Graphs travel as graph6 lines or a plain edge-list text format; all
//! certificates and reports serialize to JSON.

pub mod classes;
pub mod explorer;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod laws;
pub mod metrics;

pub use graph::{DistanceMatrix, Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
