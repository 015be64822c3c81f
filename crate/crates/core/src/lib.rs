//! Exact decision library for the Disconnected Cut problem: given a
//! connected graph, can its vertices be split into four non-empty parts
//! V1..V4 with no edges between V1 and V3 nor between V2 and V4?
//!
//! The crate pairs polynomial solvers (circular-arc, line-graph, claw-free,
//! and the 4-vertex H-free classes) with exponential ground-truth oracles
//! and a certificate checker; every "yes" carries a machine-checkable
//! partition of the original input.

pub mod arcs;
pub mod error;
pub mod files;
pub mod graph;
pub mod hfree;
pub mod iso;
pub mod linegraph;
pub mod named;
pub mod oracle;
pub mod pattern;
pub mod pipeline;
pub mod reductions;
pub mod verdict;

pub use arcs::{ArcModel, Recognition, TwoSatInstance};
pub use error::{Error, Result};
pub use graph::{classify_by_diameter, DiameterOutcome, Graph, VertexSet};
pub use oracle::{
    check_partition, find_partition_cycle, generate, oracle_disconnected_cut, oracle_wjoins,
    GeneratorKind, GeneratorSpec, PartitionViolation,
};
pub use pipeline::{solve_auto, solve_claw_free, Budgets, SolveOutcome};
pub use reductions::{ReductionStep, ReductionTrace, StepKind, WJoin};
pub use verdict::{Answer, DisconnectedPartition, Reason, Verdict};
