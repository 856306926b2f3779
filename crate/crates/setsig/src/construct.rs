//! Building set-valuations: the canonical singleton indexer, labelings that
//! reproduce a prescribed balanced signature, and seeded random valuations.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::analysis::{check_balance, BalanceVerdict};
use crate::graph::{Cycle, Graph};
use crate::signed::SignedGraph;
use crate::valuation::{GroundSet, SetValuation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("ground set of size {size} cannot label {vertex_count} vertices injectively")]
    GroundSetTooSmall { size: u32, vertex_count: usize },
}

/// Labels vertex `i` with the singleton `{i + 1}` over the ground set
/// `{1, …, n}`. Every edge gets the two-element label of its endpoints, so
/// the result is always a set-indexer and induces the all-positive
/// signature.
pub fn canonical_set_indexer(g: &Graph) -> Result<SetValuation, ConstructError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ConstructError::EmptyGraph);
    }
    let ground = GroundSet::new(n as u32).expect("n >= 1");
    let labels = (0..n)
        .map(|v| ground.label([v as u32 + 1]).expect("singleton in range"))
        .collect();
    Ok(SetValuation::new(ground, labels).expect("singletons are pairwise distinct"))
}

/// Result of trying to label a signed graph compatibly with its signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingOutcome {
    /// Valuation whose induced signature equals the input's exactly.
    Valuation(SetValuation),
    /// The input is unbalanced; no valuation can reproduce its signature.
    Unbalanced(Cycle),
}

impl LabelingOutcome {
    pub fn valuation(&self) -> Option<&SetValuation> {
        match self {
            LabelingOutcome::Valuation(v) => Some(v),
            LabelingOutcome::Unbalanced(_) => None,
        }
    }
}

/// Labels a balanced signed graph so that the induced signature reproduces
/// the given one edge-for-edge, or returns a negative cycle if unbalanced.
///
/// Over the ground set `{1, …, n+1}`, a vertex `v` on the first side of the
/// balance bipartition gets the odd label `{v+1}` and a vertex on the second
/// side gets the even label `{v+1, n+1}`. Edges inside a side join
/// same-parity labels (positive, as required since the negative edges are
/// exactly the cut) and edges across join opposite-parity labels (negative).
pub fn balance_compatible_labeling(sg: &SignedGraph) -> LabelingOutcome {
    let bipartition = match check_balance(sg) {
        BalanceVerdict::Balanced(b) => b,
        BalanceVerdict::Unbalanced(cycle) => return LabelingOutcome::Unbalanced(cycle),
    };
    let n = sg.graph().vertex_count();
    let sentinel = n as u32 + 1;
    let ground = GroundSet::new(sentinel).expect("n + 1 >= 1");
    let labels = (0..n)
        .map(|v| {
            if bipartition.in_second_part(v) {
                ground.label([v as u32 + 1, sentinel])
            } else {
                ground.label([v as u32 + 1])
            }
            .expect("elements in range")
        })
        .collect();
    let valuation =
        SetValuation::new(ground, labels).expect("per-vertex indices keep labels distinct");
    LabelingOutcome::Valuation(valuation)
}

/// Injective valuation with labels drawn uniformly from the power set of
/// `{1, …, m}`, without replacement. Deterministic per seed (ChaCha8).
pub fn random_valuation(
    g: &Graph,
    ground: GroundSet,
    seed: u64,
) -> Result<SetValuation, ConstructError> {
    let n = g.vertex_count();
    if !ground.can_label(n) {
        return Err(ConstructError::GroundSetTooSmall {
            size: ground.size(),
            vertex_count: n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut taken: HashSet<Vec<u32>> = HashSet::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    while labels.len() < n {
        // a fair coin per element samples uniformly from the power set
        let elems: Vec<u32> = (1..=ground.size()).filter(|_| rng.random_bool(0.5)).collect();
        if taken.insert(elems.clone()) {
            labels.push(ground.label(elems).expect("elements in range"));
        }
    }
    Ok(SetValuation::new(ground, labels).expect("draws are distinct by construction"))
}
