//! Edge signs and signed graphs.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::graph::{Cycle, CycleError, Edge, Graph};

/// Edge sign. `Positive` is the identity of the product; two negatives
/// multiply to a positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("signature covers {got} edges, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no sign given for edge {0}")]
    MissingSign(Edge),
}

/// A graph together with a total assignment of signs to its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<Sign>,
}

impl SignedGraph {
    /// `signs` must parallel [`Graph::edges`].
    pub fn new(graph: Graph, signs: Vec<Sign>) -> Result<Self, SignatureError> {
        if signs.len() != graph.edge_count() {
            return Err(SignatureError::LengthMismatch {
                expected: graph.edge_count(),
                got: signs.len(),
            });
        }
        Ok(SignedGraph { graph, signs })
    }

    /// Signs looked up per edge; every edge of `graph` must be covered.
    pub fn from_signature_map(
        graph: Graph,
        signature: &HashMap<Edge, Sign>,
    ) -> Result<Self, SignatureError> {
        let signs = graph
            .edges()
            .iter()
            .map(|e| signature.get(e).copied().ok_or(SignatureError::MissingSign(*e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignedGraph { graph, signs })
    }

    pub fn all_positive(graph: Graph) -> Self {
        let signs = vec![Sign::Positive; graph.edge_count()];
        SignedGraph { graph, signs }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sign(&self, e: Edge) -> Option<Sign> {
        self.graph.edge_index(e).map(|i| self.signs[i])
    }

    /// Sign of the edge at position `index` in [`Graph::edges`].
    pub fn sign_at(&self, index: usize) -> Sign {
        self.signs[index]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn edge_signs(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.graph
            .edges()
            .iter()
            .copied()
            .zip(self.signs.iter().copied())
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edge_signs()
            .filter(|(_, s)| s.is_negative())
            .map(|(e, _)| e)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|s| s.is_positive())
    }

    /// Product of the signs along the cycle.
    pub fn cycle_sign(&self, cycle: &Cycle) -> Result<Sign, CycleError> {
        let mut product = Sign::Positive;
        for e in cycle.edges() {
            let s = self.sign(e).ok_or(CycleError::EdgeNotInGraph(e))?;
            product = product * s;
        }
        Ok(product)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed_triangle(signs: [Sign; 3]) -> SignedGraph {
        let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        // edges sort to (0,1), (0,2), (1,2); keep the cycle-order intent:
        // signs[0] = (0,1), signs[1] = (1,2), signs[2] = (2,0)
        let mut map = HashMap::new();
        map.insert(Edge::new(0, 1), signs[0]);
        map.insert(Edge::new(1, 2), signs[1]);
        map.insert(Edge::new(2, 0), signs[2]);
        SignedGraph::from_signature_map(g, &map).unwrap()
    }

    use Sign::{Negative as N, Positive as P};

    #[test]
    fn sign_product_table() {
        assert_eq!(P * P, P);
        assert_eq!(N * N, P);
        assert_eq!(P * N, N);
        assert_eq!(N * P, N);
    }

    #[test]
    fn cycle_sign_products() {
        let c = Cycle::new(vec![0, 1, 2]).unwrap();
        assert_eq!(signed_triangle([P, P, P]).cycle_sign(&c), Ok(P));
        assert_eq!(signed_triangle([P, N, N]).cycle_sign(&c), Ok(P));
        assert_eq!(signed_triangle([P, P, N]).cycle_sign(&c), Ok(N));
    }

    #[test]
    fn cycle_sign_invariant_under_rotation_and_reflection() {
        let sg = signed_triangle([P, N, N]);
        for vs in [vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0], vec![0, 2, 1]] {
            let c = Cycle::new(vs).unwrap();
            assert_eq!(sg.cycle_sign(&c), Ok(P));
        }
    }

    #[test]
    fn cycle_sign_rejects_foreign_edges() {
        let sg = signed_triangle([P, P, P]);
        let c = Cycle::new(vec![0, 1, 3]).unwrap();
        assert!(matches!(
            sg.cycle_sign(&c),
            Err(CycleError::EdgeNotInGraph(_))
        ));
    }

    #[test]
    fn signature_must_be_total() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            SignedGraph::new(g.clone(), vec![P]),
            Err(SignatureError::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
        let mut partial = HashMap::new();
        partial.insert(Edge::new(0, 1), P);
        assert_eq!(
            SignedGraph::from_signature_map(g, &partial),
            Err(SignatureError::MissingSign(Edge::new(1, 2)))
        );
    }

    #[test]
    fn negative_edge_listing() {
        let sg = signed_triangle([P, N, N]);
        let negatives: Vec<Edge> = sg.negative_edges().collect();
        assert_eq!(negatives, vec![Edge::new(0, 2), Edge::new(1, 2)]);
        assert_eq!(sg.negative_edge_count(), 2);
        assert!(!sg.is_all_positive());
    }
}
