//! Balance, clusterability, and Eulerian label-sum analyses.
//!
//! Balance detection runs in linear time by 2-coloring each component over a
//! BFS tree: walking a positive edge keeps the color, walking a negative
//! edge flips it. A non-tree edge that contradicts the coloring closes a
//! negative cycle through the tree, which is returned as the witness.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Cycle, CycleError, Edge, Graph, VertexId};
use crate::signed::SignedGraph;
use crate::valuation::{check_set_indexer, IndexerVerdict, SetValuation, ValuationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("valuation is not a set-indexer: edges {first} and {second} share a label")]
    NotSetIndexer { first: Edge, second: Edge },
    #[error(transparent)]
    Valuation(#[from] ValuationError),
}

/// Vertex partition `(V1, V2)` with the negative edges exactly the edges
/// between the parts. `V2` may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    in_second: Vec<bool>,
}

impl Bipartition {
    pub fn vertex_count(&self) -> usize {
        self.in_second.len()
    }

    pub fn in_second_part(&self, v: VertexId) -> bool {
        self.in_second[v]
    }

    /// Whether `u` and `v` lie on opposite sides.
    pub fn separates(&self, u: VertexId, v: VertexId) -> bool {
        self.in_second[u] != self.in_second[v]
    }

    /// `(V1, V2)`, each sorted ascending.
    pub fn parts(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (v, &snd) in self.in_second.iter().enumerate() {
            if snd {
                second.push(v);
            } else {
                first.push(v);
            }
        }
        (first, second)
    }
}

/// Result of balance detection, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceVerdict {
    Balanced(Bipartition),
    Unbalanced(Cycle),
}

impl BalanceVerdict {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceVerdict::Balanced(_))
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        match self {
            BalanceVerdict::Balanced(b) => Some(b),
            BalanceVerdict::Unbalanced(_) => None,
        }
    }

    pub fn negative_cycle(&self) -> Option<&Cycle> {
        match self {
            BalanceVerdict::Balanced(_) => None,
            BalanceVerdict::Unbalanced(c) => Some(c),
        }
    }
}

/// Simple cycle through the BFS tree closed by the edge `(u, v)`.
fn tree_cycle(
    u: VertexId,
    v: VertexId,
    parent: &[Option<VertexId>],
    depth: &[usize],
) -> Cycle {
    let (mut a, mut b) = (u, v);
    let mut ascent_u = vec![u];
    let mut ascent_v = vec![v];
    while depth[a] > depth[b] {
        a = parent[a].expect("deeper vertex has a parent");
        ascent_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].expect("deeper vertex has a parent");
        ascent_v.push(b);
    }
    while a != b {
        a = parent[a].expect("distinct vertices at equal depth have parents");
        ascent_u.push(a);
        b = parent[b].expect("distinct vertices at equal depth have parents");
        ascent_v.push(b);
    }
    // ascent_u ends at the common ancestor; splice in the v-side path back
    // down, dropping the duplicated ancestor.
    ascent_v.pop();
    ascent_v.reverse();
    ascent_u.extend(ascent_v);
    Cycle::new(ascent_u).expect("tree paths plus a non-tree edge form a simple cycle")
}

/// Decides balance: either a bipartition with the negative edges exactly the
/// cut, or a cycle of negative sign.
pub fn check_balance(sg: &SignedGraph) -> BalanceVerdict {
    let g = sg.graph();
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut in_second = vec![false; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut depth = vec![0usize; n];

    for root in g.vertices() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let flip = sg
                    .sign(Edge::new(u, w))
                    .expect("neighbor relation implies an edge")
                    .is_negative();
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    in_second[w] = in_second[u] ^ flip;
                    queue.push_back(w);
                } else if (in_second[u] ^ in_second[w]) != flip {
                    return BalanceVerdict::Unbalanced(tree_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    BalanceVerdict::Balanced(Bipartition { in_second })
}

/// Number of negative edges on the cycle.
pub fn cycle_negative_count(sg: &SignedGraph, cycle: &Cycle) -> Result<usize, CycleError> {
    let mut count = 0;
    for e in cycle.edges() {
        if sg.sign(e).ok_or(CycleError::EdgeNotInGraph(e))?.is_negative() {
            count += 1;
        }
    }
    Ok(count)
}

/// Two non-empty clusters: positive edges stay inside a cluster, negative
/// edges cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterCertificate {
    pub clusters: (Vec<VertexId>, Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClusterVerdict {
    Clusterable(ClusterCertificate),
    /// Balanced but with no negative edge: no split into two non-empty
    /// clusters can work.
    AllPositive,
    Unbalanced(Cycle),
}

impl ClusterVerdict {
    pub fn is_clusterable(&self) -> bool {
        matches!(self, ClusterVerdict::Clusterable(_))
    }
}

/// Decides 2-clusterability of a connected signed graph: clusterable exactly
/// when balanced with at least one negative edge, and then the bipartition
/// certifying balance is the clustering.
pub fn check_two_clusterable(sg: &SignedGraph) -> Result<ClusterVerdict, AnalysisError> {
    if !sg.graph().is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    match check_balance(sg) {
        BalanceVerdict::Unbalanced(c) => Ok(ClusterVerdict::Unbalanced(c)),
        BalanceVerdict::Balanced(bip) => {
            if sg.negative_edge_count() == 0 {
                return Ok(ClusterVerdict::AllPositive);
            }
            let clusters = bip.parts();
            debug_assert!(!clusters.0.is_empty() && !clusters.1.is_empty());
            Ok(ClusterVerdict::Clusterable(ClusterCertificate { clusters }))
        }
    }
}

/// The label-level criterion for 2-clusterability: some edge joins vertices
/// with opposite-parity labels.
pub fn two_clusterable_by_parity(g: &Graph, val: &SetValuation) -> Result<bool, AnalysisError> {
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    if val.vertex_count() != g.vertex_count() {
        return Err(ValuationError::MissingLabel {
            expected: g.vertex_count(),
            got: val.vertex_count(),
        }
        .into());
    }
    Ok(g.edges().iter().any(|e| {
        let (u, v) = e.endpoints();
        !val.label(u).same_parity(val.label(v))
    }))
}

/// Connected up to isolated vertices, with every degree even.
pub fn is_eulerian(g: &Graph) -> bool {
    if g.vertices().any(|v| g.degree(v) % 2 != 0) {
        return false;
    }
    let components_with_edges = g
        .connected_components()
        .into_iter()
        .filter(|c| c.iter().any(|&v| g.degree(v) > 0))
        .count();
    components_with_edges <= 1
}

/// Edge-disjoint simple cycles covering every edge exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Whether the cycles' edges partition the graph's edge set exactly.
    pub fn partitions_edges_of(&self, g: &Graph) -> bool {
        let mut edges: Vec<Edge> = self.cycles.iter().flat_map(|c| c.edges()).collect();
        edges.sort_unstable();
        let distinct = edges.windows(2).all(|w| w[0] != w[1]);
        distinct && edges == g.edges()
    }
}

/// Peels edge-disjoint simple cycles off an Eulerian graph until every edge
/// is used: walk from any vertex with remaining degree, and each time the
/// walk revisits a vertex, extract the loop just closed.
pub fn eulerian_cycle_decomposition(g: &Graph) -> Result<CycleDecomposition, AnalysisError> {
    if !is_eulerian(g) {
        return Err(AnalysisError::NotEulerian);
    }
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(VertexId, usize)>> = vec![Vec::new(); n];
    for (idx, e) in g.edges().iter().enumerate() {
        let (u, v) = e.endpoints();
        incident[u].push((v, idx));
        incident[v].push((u, idx));
    }
    let mut used = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; n];
    let mut take_unused = |v: VertexId, used: &[bool]| -> Option<(VertexId, usize)> {
        while cursor[v] < incident[v].len() {
            let (w, idx) = incident[v][cursor[v]];
            if used[idx] {
                cursor[v] += 1;
            } else {
                return Some((w, idx));
            }
        }
        None
    };

    let mut cycles = Vec::new();
    for start in g.vertices() {
        while take_unused(start, &used).is_some() {
            let mut path = vec![start];
            let mut pos: Vec<Option<usize>> = vec![None; n];
            pos[start] = Some(0);
            let mut current = start;
            loop {
                match take_unused(current, &used) {
                    None => {
                        debug_assert!(current == start && path.len() == 1);
                        break;
                    }
                    Some((w, idx)) => {
                        used[idx] = true;
                        if let Some(p) = pos[w] {
                            for &x in &path[p + 1..] {
                                pos[x] = None;
                            }
                            cycles.push(
                                Cycle::new(path[p..].to_vec())
                                    .expect("closed walk segment is a simple cycle"),
                            );
                            path.truncate(p + 1);
                        } else {
                            pos[w] = Some(path.len());
                            path.push(w);
                        }
                        current = w;
                    }
                }
            }
        }
    }
    Ok(CycleDecomposition { cycles })
}

/// Per-cycle symmetric-difference size totals over a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLabelSum {
    pub cycle: Cycle,
    /// Sum of the induced edge-label sizes along the cycle.
    pub sum: u64,
    /// Sum restricted to positive edges (even-size labels).
    pub positive_sum: u64,
    /// Sum restricted to negative edges (odd-size labels).
    pub negative_sum: u64,
    pub positive_edges: usize,
    pub negative_edges: usize,
}

/// Total and per-cycle sums of induced edge-label sizes over an Eulerian
/// graph's cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSumReport {
    pub total: u64,
    pub cycles: Vec<CycleLabelSum>,
}

impl LabelSumReport {
    pub fn total_is_even(&self) -> bool {
        self.total % 2 == 0
    }

    pub fn all_cycle_sums_even(&self) -> bool {
        self.cycles.iter().all(|c| c.sum % 2 == 0)
    }
}

/// Label-sum analysis requiring the valuation to be a set-indexer of `g`.
pub fn eulerian_label_sum(g: &Graph, val: &SetValuation) -> Result<LabelSumReport, AnalysisError> {
    match check_set_indexer(g, val)? {
        IndexerVerdict::Indexer => eulerian_label_sum_relaxed(g, val),
        IndexerVerdict::EdgeLabelCollision { first, second } => {
            Err(AnalysisError::NotSetIndexer { first, second })
        }
    }
}

/// As [`eulerian_label_sum`] but accepting any valuation; the parity
/// conclusions only depend on the induced signs.
pub fn eulerian_label_sum_relaxed(
    g: &Graph,
    val: &SetValuation,
) -> Result<LabelSumReport, AnalysisError> {
    if val.vertex_count() != g.vertex_count() {
        return Err(ValuationError::MissingLabel {
            expected: g.vertex_count(),
            got: val.vertex_count(),
        }
        .into());
    }
    let decomposition = eulerian_cycle_decomposition(g)?;
    let mut total = 0u64;
    let mut cycles = Vec::with_capacity(decomposition.cycles().len());
    for cycle in decomposition.cycles() {
        let mut summary = CycleLabelSum {
            cycle: cycle.clone(),
            sum: 0,
            positive_sum: 0,
            negative_sum: 0,
            positive_edges: 0,
            negative_edges: 0,
        };
        for e in cycle.edges() {
            let (u, v) = e.endpoints();
            let size = val
                .label(u)
                .symmetric_difference(val.label(v))
                .expect("labels of one valuation share its ground set")
                .cardinality() as u64;
            summary.sum += size;
            if size % 2 == 0 {
                summary.positive_sum += size;
                summary.positive_edges += 1;
            } else {
                summary.negative_sum += size;
                summary.negative_edges += 1;
            }
        }
        total += summary.sum;
        cycles.push(summary);
    }
    Ok(LabelSumReport { total, cycles })
}
