//! Simple undirected graphs: construction, traversal, and simple-cycle
//! enumeration.
//!
//! Graphs are immutable after construction. Vertices are dense indices
//! `0..n`; edges are unordered pairs of distinct vertices, stored in a
//! canonical sorted form so that equality and lookups are cheap.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Default cap on the number of cycles [`Graph::enumerate_cycles`] will emit.
pub const DEFAULT_CYCLE_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: VertexId, vertex_count: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeated in cycle")]
    RepeatedVertex(VertexId),
    #[error("edge {0} not in graph")]
    EdgeNotInGraph(Edge),
    #[error("cycle enumeration exceeded budget of {budget}")]
    BudgetExceeded { budget: usize },
}

/// Unordered pair of distinct vertices; the smaller endpoint is stored first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Panics if `u == v`. Self-loops in untrusted input are rejected with a
    /// proper error by [`Graph::build`] and the parsers before edges exist.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        assert_ne!(u, v, "self-loop is not an edge");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: VertexId) -> VertexId {
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Simple cycle stored as a canonical vertex sequence: the minimum vertex
/// first, oriented so the second vertex is smaller than the last. Two cycles
/// that differ only by rotation or reflection compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(CycleError::RepeatedVertex(pair[0]));
            }
        }
        let min_pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        vertices.rotate_left(min_pos);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a cycle always has at least 3 vertices
    }

    /// Consecutive edges, including the wrap-around from last to first.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
    duplicates_removed: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are removed (the
    /// count is kept, see [`Graph::duplicates_removed`]); self-loops and
    /// out-of-range endpoints are errors.
    pub fn build(
        vertex_count: usize,
        edge_list: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push(Edge::new(u, v));
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        let duplicates_removed = before - edges.len();

        let mut adj = vec![Vec::new(); vertex_count];
        for e in &edges {
            let (u, v) = e.endpoints();
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adj,
            duplicates_removed,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && u < self.vertex_count && v < self.vertex_count && self.edge_index(Edge::new(u, v)).is_some()
    }

    /// Position of `e` in [`Graph::edges`], if present.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// How many duplicate entries the edge list passed to [`Graph::build`]
    /// contained.
    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    /// Degree-zero vertices. Permitted, but worth a warning at the tool
    /// level: most structural statements assume none exist.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    /// Vertex sets of the maximal connected subgraphs, each sorted, ordered
    /// by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            let mut component = vec![root];
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Enumerates every simple cycle exactly once up to rotation and
    /// reflection, with the default budget. Exponential in general; intended
    /// for small graphs.
    pub fn enumerate_cycles(&self) -> Result<Vec<Cycle>, CycleError> {
        self.enumerate_cycles_with_budget(DEFAULT_CYCLE_BUDGET)
    }

    /// As [`Graph::enumerate_cycles`], erroring once more than `budget`
    /// cycles have been found.
    ///
    /// Each cycle is discovered from its minimum vertex: the search walks
    /// paths using only larger vertices and closes back to the start, and the
    /// orientation with the smaller second vertex is the one kept.
    pub fn enumerate_cycles_with_budget(&self, budget: usize) -> Result<Vec<Cycle>, CycleError> {
        let n = self.vertex_count;
        let mut cycles = Vec::new();
        let mut in_path = vec![false; n];
        let mut path: Vec<VertexId> = Vec::new();

        for start in self.vertices() {
            path.clear();
            path.push(start);
            in_path[start] = true;
            // (vertex, index of the next neighbor to try)
            let mut stack: Vec<(VertexId, usize)> = vec![(start, 0)];
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < self.adj[v].len() {
                    let w = self.adj[v][*next];
                    *next += 1;
                    if w == start && path.len() >= 3 && path[1] < v {
                        if cycles.len() == budget {
                            return Err(CycleError::BudgetExceeded { budget });
                        }
                        cycles.push(Cycle::new(path.clone()).expect("search paths are simple"));
                    } else if w > start && !in_path[w] {
                        in_path[w] = true;
                        path.push(w);
                        stack.push((w, 0));
                    }
                } else {
                    stack.pop();
                    in_path[v] = false;
                    path.pop();
                }
            }
        }
        cycles.sort_unstable();
        Ok(cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn triangle() -> Graph {
        Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.duplicates_removed(), 0);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 1) && g.has_edge(0, 2));
    }

    #[test]
    fn build_deduplicates_reversed_edge() {
        let g = Graph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0], Edge::new(0, 1));
        assert_eq!(g.duplicates_removed(), 1);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::InvalidVertex {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn isolated_vertices_reported() {
        let g = Graph::build(4, &[(1, 2)]).unwrap();
        assert_eq!(g.isolated_vertices(), vec![0, 3]);
    }

    #[test]
    fn cycle_canonical_under_rotation_and_reflection() {
        let a = Cycle::new(vec![0, 1, 2, 3]).unwrap();
        let b = Cycle::new(vec![2, 3, 0, 1]).unwrap();
        let c = Cycle::new(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cycle_rejects_short_and_repeated() {
        assert_eq!(Cycle::new(vec![0, 1]), Err(CycleError::TooShort(2)));
        assert_eq!(
            Cycle::new(vec![0, 1, 2, 1]),
            Err(CycleError::RepeatedVertex(1))
        );
    }

    #[test]
    fn triangle_has_exactly_one_cycle() {
        let cycles = triangle().enumerate_cycles().unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn path_is_acyclic() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.enumerate_cycles().unwrap().is_empty());
    }

    #[test]
    fn k4_has_seven_cycles() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cycles = g.enumerate_cycles().unwrap();
        assert_eq!(cycles.len(), 7);
        let triangles = cycles.iter().filter(|c| c.len() == 3).count();
        let quads = cycles.iter().filter(|c| c.len() == 4).count();
        assert_eq!((triangles, quads), (4, 3));
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            g.enumerate_cycles_with_budget(6),
            Err(CycleError::BudgetExceeded { budget: 6 })
        );
    }

    #[test]
    fn components_of_triangle_and_friends() {
        assert_eq!(triangle().connected_components(), vec![vec![0, 1, 2]]);
        let two_edges = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_edges.connected_components(),
            vec![vec![0, 1], vec![2, 3]]
        );
        let empty = Graph::build(3, &[]).unwrap();
        assert_eq!(
            empty.connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert!(!two_edges.is_connected());
        assert!(triangle().is_connected());
    }

    /// Brute-force cycle listing: every vertex subset, every circular
    /// ordering fixed at the minimum vertex with orientation pinned, kept
    /// when all consecutive pairs are edges. Independent of the search in
    /// `enumerate_cycles`.
    fn brute_force_cycles(g: &Graph) -> BTreeSet<Cycle> {
        fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
            if items.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(i);
                for mut tail in permutations(&rest) {
                    tail.insert(0, x);
                    out.push(tail);
                }
            }
            out
        }

        let n = g.vertex_count();
        let mut found = BTreeSet::new();
        for mask in 0u64..(1 << n) {
            let subset: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if subset.len() < 3 {
                continue;
            }
            let first = subset[0];
            for perm in permutations(&subset[1..]) {
                if perm[0] > perm[perm.len() - 1] {
                    continue; // reflection duplicate
                }
                let mut order = vec![first];
                order.extend(perm);
                let ok = (0..order.len())
                    .all(|i| g.has_edge(order[i], order[(i + 1) % order.len()]));
                if ok {
                    found.insert(Cycle::new(order).unwrap());
                }
            }
        }
        found
    }

    #[test]
    fn enumeration_matches_brute_force_exhaustively_to_n5() {
        for n in 1..=5usize {
            let pairs: Vec<(VertexId, VertexId)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(VertexId, VertexId)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::build(n, &edges).unwrap();
                let fast: BTreeSet<Cycle> =
                    g.enumerate_cycles().unwrap().into_iter().collect();
                assert_eq!(fast, brute_force_cycles(&g), "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force_on_random_graphs_to_n8() {
        // Small deterministic congruential stream; enough to vary the graphs.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for n in 6..=8usize {
            for _ in 0..20 {
                let pairs: Vec<(VertexId, VertexId)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| next() % 100 < 40)
                    .collect();
                let g = Graph::build(n, &pairs).unwrap();
                let fast: BTreeSet<Cycle> =
                    g.enumerate_cycles().unwrap().into_iter().collect();
                assert_eq!(fast, brute_force_cycles(&g), "n={n}");
            }
        }
    }
}
