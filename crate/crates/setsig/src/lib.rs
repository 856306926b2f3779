//! Signed graphs whose edge signs come from set-valued vertex labels.
//!
//! A vertex labeling assigns each vertex a subset of a finite ground set;
//! an edge then carries the symmetric difference of its endpoint labels and
//! the sign `(-1)^|label|`. This crate builds such labelings, analyzes the
//! signed graphs they induce (balance with certificates, 2-clusterability,
//! Eulerian label-sum parities), and ships independent brute-force oracles
//! that re-derive every structural claim on small instances.

pub mod analysis;
pub mod construct;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod signed;
pub mod valuation;

pub use analysis::{
    check_balance, check_two_clusterable, cycle_negative_count, eulerian_cycle_decomposition,
    eulerian_label_sum, eulerian_label_sum_relaxed, is_eulerian, two_clusterable_by_parity,
    AnalysisError, BalanceVerdict, Bipartition, ClusterCertificate, ClusterVerdict,
    CycleDecomposition, LabelSumReport,
};
pub use construct::{
    balance_compatible_labeling, canonical_set_indexer, random_valuation, ConstructError,
    LabelingOutcome,
};
pub use graph::{Cycle, CycleError, Edge, Graph, GraphError, VertexId, DEFAULT_CYCLE_BUDGET};
pub use oracle::{
    brute_balance, brute_two_cluster, exhaustive_valuations, verify_theorem_suite, OracleError,
    SuiteConfig, SuiteReport,
};
pub use signed::{Sign, SignatureError, SignedGraph};
pub use valuation::{
    check_set_indexer, induce_signed_graph, GroundSet, IndexerVerdict, ParityPartition, SetLabel,
    SetValuation, ValuationError,
};
