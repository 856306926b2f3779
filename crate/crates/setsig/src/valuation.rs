//! Set-valued vertex labels and the edge signs they induce.
//!
//! Vertices carry subsets of a finite ground set `{1, …, m}`. An edge label
//! is the symmetric difference of its endpoint labels, and the induced sign
//! of an edge is `+` exactly when that symmetric difference has even size.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};
use crate::signed::{Sign, SignedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValuationError {
    #[error("ground set must be non-empty")]
    EmptyGroundSet,
    #[error("element {element} outside ground set 1..={size}")]
    ElementOutOfRange { element: u32, size: u32 },
    #[error("labels drawn from different ground sets (sizes {left} and {right})")]
    GroundSetMismatch { left: u32, right: u32 },
    #[error("vertices {first} and {second} carry the same label")]
    NotInjective { first: VertexId, second: VertexId },
    #[error("valuation labels {got} vertices, graph has {expected}")]
    MissingLabel { expected: usize, got: usize },
    #[error("edge {0} not in graph")]
    EdgeNotInGraph(Edge),
}

/// The finite universe `{1, …, m}` whose subsets label vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    size: u32,
}

impl GroundSet {
    pub fn new(size: u32) -> Result<Self, ValuationError> {
        if size == 0 {
            return Err(ValuationError::EmptyGroundSet);
        }
        Ok(GroundSet { size })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Whether the power set has at least `n` members, i.e. whether `n`
    /// vertices can be labeled injectively.
    pub fn can_label(&self, n: usize) -> bool {
        self.size >= 64 || (1u128 << self.size) >= n as u128
    }

    /// A subset of this ground set. Elements are sorted and deduplicated.
    pub fn label(&self, elements: impl IntoIterator<Item = u32>) -> Result<SetLabel, ValuationError> {
        let mut elems: Vec<u32> = elements.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        for &e in &elems {
            if e == 0 || e > self.size {
                return Err(ValuationError::ElementOutOfRange {
                    element: e,
                    size: self.size,
                });
            }
        }
        Ok(SetLabel {
            ground: *self,
            elems,
        })
    }

    pub fn empty_label(&self) -> SetLabel {
        SetLabel {
            ground: *self,
            elems: Vec::new(),
        }
    }

    /// Subset from a bitmask: bit `i` set means element `i + 1` is present.
    /// Panics if the mask uses bits beyond the ground set or `m > 64`.
    pub fn label_from_mask(&self, mask: u64) -> SetLabel {
        assert!(self.size <= 64, "mask labels need m <= 64");
        if self.size < 64 {
            assert!(mask < 1u64 << self.size, "mask uses elements beyond the ground set");
        }
        let elems = (0..self.size as u64)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i as u32 + 1)
            .collect();
        SetLabel {
            ground: *self,
            elems,
        }
    }
}

/// A subset of a [`GroundSet`], kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetLabel {
    ground: GroundSet,
    elems: Vec<u32>,
}

impl SetLabel {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn cardinality(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.elems.len() % 2 == 0
    }

    pub fn contains(&self, element: u32) -> bool {
        self.elems.binary_search(&element).is_ok()
    }

    fn check_same_ground(&self, other: &SetLabel) -> Result<(), ValuationError> {
        if self.ground != other.ground {
            return Err(ValuationError::GroundSetMismatch {
                left: self.ground.size,
                right: other.ground.size,
            });
        }
        Ok(())
    }

    /// Elements in exactly one of the two sets.
    pub fn symmetric_difference(&self, other: &SetLabel) -> Result<SetLabel, ValuationError> {
        self.check_same_ground(other)?;
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.elems, &other.elems);
        let mut elems = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    elems.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    elems.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        elems.extend_from_slice(&a[i..]);
        elems.extend_from_slice(&b[j..]);
        Ok(SetLabel {
            ground: self.ground,
            elems,
        })
    }

    /// `|self ⊕ other|` without materializing the set.
    fn symmetric_difference_size(&self, other: &SetLabel) -> usize {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.elems, &other.elems);
        let mut common = 0;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        a.len() + b.len() - 2 * common
    }

    /// Sign induced on an edge whose endpoints carry these two labels:
    /// positive exactly when the symmetric difference has even size.
    pub fn induced_sign(&self, other: &SetLabel) -> Result<Sign, ValuationError> {
        self.check_same_ground(other)?;
        if self.symmetric_difference_size(other) % 2 == 0 {
            Ok(Sign::Positive)
        } else {
            Ok(Sign::Negative)
        }
    }

    /// Whether the two sets are simultaneously even or simultaneously odd.
    pub fn same_parity(&self, other: &SetLabel) -> bool {
        self.elems.len() % 2 == other.elems.len() % 2
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Vertices split by the parity of their label cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPartition {
    pub odd: Vec<VertexId>,
    pub even: Vec<VertexId>,
}

/// An injective assignment of labels to the vertices `0..n`.
///
/// Injectivity is established at construction, so every value of this type
/// is a valid set-valuation of any graph with matching vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuation {
    ground: GroundSet,
    labels: Vec<SetLabel>,
}

impl SetValuation {
    pub fn new(ground: GroundSet, labels: Vec<SetLabel>) -> Result<Self, ValuationError> {
        let mut seen: HashMap<&[u32], VertexId> = HashMap::with_capacity(labels.len());
        for (v, label) in labels.iter().enumerate() {
            if label.ground != ground {
                return Err(ValuationError::GroundSetMismatch {
                    left: ground.size,
                    right: label.ground.size,
                });
            }
            if let Some(&first) = seen.get(label.elements()) {
                return Err(ValuationError::NotInjective { first, second: v });
            }
            seen.insert(label.elements(), v);
        }
        drop(seen);
        Ok(SetValuation { ground, labels })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> &SetLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[SetLabel] {
        &self.labels
    }

    fn check_covers(&self, g: &Graph) -> Result<(), ValuationError> {
        if self.labels.len() != g.vertex_count() {
            return Err(ValuationError::MissingLabel {
                expected: g.vertex_count(),
                got: self.labels.len(),
            });
        }
        Ok(())
    }

    /// Label induced on an edge: the symmetric difference of its endpoints'
    /// labels.
    pub fn induced_edge_label(&self, g: &Graph, e: Edge) -> Result<SetLabel, ValuationError> {
        self.check_covers(g)?;
        if g.edge_index(e).is_none() {
            return Err(ValuationError::EdgeNotInGraph(e));
        }
        let (u, v) = e.endpoints();
        self.labels[u].symmetric_difference(&self.labels[v])
    }

    /// Vertices split by label-cardinality parity.
    pub fn parity_partition(&self) -> ParityPartition {
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for (v, label) in self.labels.iter().enumerate() {
            if label.is_even() {
                even.push(v);
            } else {
                odd.push(v);
            }
        }
        ParityPartition { odd, even }
    }
}

/// Builds the signed graph whose signature is induced by the valuation:
/// each edge takes the sign of its endpoints' symmetric difference size.
pub fn induce_signed_graph(g: &Graph, val: &SetValuation) -> Result<SignedGraph, ValuationError> {
    val.check_covers(g)?;
    let signs = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            val.label(u)
                .induced_sign(val.label(v))
                .expect("labels of one valuation share its ground set")
        })
        .collect();
    Ok(SignedGraph::new(g.clone(), signs).expect("one sign per edge"))
}

/// Outcome of checking whether every induced edge label is distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexerVerdict {
    Indexer,
    /// Two edges whose induced labels coincide; `first` precedes `second`
    /// in the graph's canonical edge order.
    EdgeLabelCollision { first: Edge, second: Edge },
}

impl IndexerVerdict {
    pub fn is_indexer(&self) -> bool {
        matches!(self, IndexerVerdict::Indexer)
    }
}

/// Checks whether `val` is a set-indexer of `g`, i.e. whether the induced
/// edge labels are pairwise distinct.
pub fn check_set_indexer(g: &Graph, val: &SetValuation) -> Result<IndexerVerdict, ValuationError> {
    val.check_covers(g)?;
    let mut seen: HashMap<Vec<u32>, Edge> = HashMap::with_capacity(g.edge_count());
    for &e in g.edges() {
        let (u, v) = e.endpoints();
        let label = val.label(u).symmetric_difference(val.label(v))?;
        if let Some(&first) = seen.get(label.elements()) {
            return Ok(IndexerVerdict::EdgeLabelCollision { first, second: e });
        }
        seen.insert(label.elements().to_vec(), e);
    }
    Ok(IndexerVerdict::Indexer)
}
