//! Brute-force ground truth and the theorem verification suite.
//!
//! Everything here is deliberately naive — partition scans, full
//! enumerations — and shares no code with the linear-time analyses it
//! checks. The suite walks exhaustive families of small labeled graphs,
//! valuations, and signatures, and reports any counterexample it finds.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

use crate::analysis::{
    check_balance, check_two_clusterable, eulerian_cycle_decomposition,
    eulerian_label_sum_relaxed, is_eulerian, two_clusterable_by_parity,
};
use crate::construct::{balance_compatible_labeling, LabelingOutcome};
use crate::graph::{CycleError, Graph, VertexId};
use crate::signed::{Sign, SignedGraph};
use crate::valuation::{induce_signed_graph, GroundSet, SetValuation};

/// Vertex cap for the `2^n` partition scans.
pub const MAX_BRUTE_VERTICES: usize = 20;

/// Default instance budget for [`verify_theorem_suite`].
pub const DEFAULT_SUITE_BUDGET: u64 = 1_000_000;

const EXAMPLE_CAP: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {vertex_count} vertices exceeds the brute-force limit of {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("family requires {required} instances, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("ground set of size {size} cannot label {vertex_count} vertices injectively")]
    GroundSetTooSmall { size: u32, vertex_count: usize },
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

/// Scans all `2^n` vertex bipartitions for one whose cut is exactly the
/// negative edge set.
pub fn brute_balance(sg: &SignedGraph) -> Result<bool, OracleError> {
    let n = sg.graph().vertex_count();
    if n > MAX_BRUTE_VERTICES {
        return Err(OracleError::TooLarge {
            vertex_count: n,
            limit: MAX_BRUTE_VERTICES,
        });
    }
    Ok((0u64..1 << n).any(|mask| cut_matches_signs(sg, mask)))
}

/// Scans all splits into two non-empty parts for one where positive edges
/// stay inside a part and negative edges cross.
pub fn brute_two_cluster(sg: &SignedGraph) -> Result<bool, OracleError> {
    let n = sg.graph().vertex_count();
    if n > MAX_BRUTE_VERTICES {
        return Err(OracleError::TooLarge {
            vertex_count: n,
            limit: MAX_BRUTE_VERTICES,
        });
    }
    if n == 0 {
        return Ok(false);
    }
    Ok((1u64..(1 << n) - 1).any(|mask| cut_matches_signs(sg, mask)))
}

fn cut_matches_signs(sg: &SignedGraph, mask: u64) -> bool {
    sg.edge_signs().all(|(e, s)| {
        let (u, v) = e.endpoints();
        let crosses = (mask >> u ^ mask >> v) & 1 == 1;
        crosses == s.is_negative()
    })
}

/// Number of injective labelings of `n` vertices from the power set of the
/// ground set, saturating.
pub fn injective_valuation_count(n: usize, ground: GroundSet) -> u128 {
    let subsets: u128 = if ground.size() >= 128 {
        u128::MAX
    } else {
        1u128 << ground.size()
    };
    let mut count: u128 = 1;
    for i in 0..n as u128 {
        count = count.saturating_mul(subsets.saturating_sub(i));
    }
    count
}

/// Streams every injective labeling of `n` vertices by subsets of the
/// ground set, in lexicographic bitmask order.
pub struct ExhaustiveValuations {
    ground: GroundSet,
    subset_count: u64,
    selection: Vec<u64>,
    used: Vec<bool>,
    done: bool,
}

/// Iterator over all injective valuations of `n` vertices over `ground`.
/// Errors if the power set is too small or the count exceeds `budget`.
pub fn exhaustive_valuations(
    n: usize,
    ground: GroundSet,
    budget: u64,
) -> Result<ExhaustiveValuations, OracleError> {
    if !ground.can_label(n) {
        return Err(OracleError::GroundSetTooSmall {
            size: ground.size(),
            vertex_count: n,
        });
    }
    let required = injective_valuation_count(n, ground);
    if required > budget as u128 {
        return Err(OracleError::BudgetExceeded { required, budget });
    }
    // After the budget check, 2^m <= required <= budget fits in u64 whenever
    // there is at least one vertex to label.
    let subset_count = if n == 0 { 0 } else { 1u64 << ground.size() };
    let mut used = vec![false; subset_count as usize];
    let selection: Vec<u64> = (0..n as u64).collect();
    for &mask in &selection {
        used[mask as usize] = true;
    }
    Ok(ExhaustiveValuations {
        ground,
        subset_count,
        selection,
        used,
        done: false,
    })
}

impl ExhaustiveValuations {
    fn current(&self) -> SetValuation {
        let labels = self
            .selection
            .iter()
            .map(|&mask| self.ground.label_from_mask(mask))
            .collect();
        SetValuation::new(self.ground, labels).expect("selection masks are distinct")
    }

    fn advance(&mut self) {
        let n = self.selection.len();
        let mut k = n;
        loop {
            if k == 0 {
                self.done = true;
                return;
            }
            k -= 1;
            let old = self.selection[k];
            self.used[old as usize] = false;
            let mut cand = old + 1;
            while cand < self.subset_count && self.used[cand as usize] {
                cand += 1;
            }
            if cand < self.subset_count {
                self.used[cand as usize] = true;
                self.selection[k] = cand;
                let mut fill = 0u64;
                for pos in k + 1..n {
                    while self.used[fill as usize] {
                        fill += 1;
                    }
                    self.used[fill as usize] = true;
                    self.selection[pos] = fill;
                }
                return;
            }
        }
    }
}

impl Iterator for ExhaustiveValuations {
    type Item = SetValuation;

    fn next(&mut self) -> Option<SetValuation> {
        if self.done {
            return None;
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

fn vertex_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// All `2^(n choose 2)` labeled graphs on the vertex set `0..n`. Intended
/// for small `n`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() < 64, "labeled-graph enumeration is for small n");
    (0u64..1 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask))
}

fn graph_from_mask(n: usize, pairs: &[(VertexId, VertexId)], mask: u64) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::build(n, &edges).expect("pairs are in range and loop-free")
}

/// All connected labeled graphs on `0..n`.
pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(|g| g.is_connected())
}

/// All `2^|E|` signatures of the graph.
pub fn all_signatures(g: &Graph) -> impl Iterator<Item = SignedGraph> + '_ {
    let edge_count = g.edge_count();
    assert!(edge_count < 64, "signature enumeration is for small graphs");
    (0u64..1 << edge_count).map(move |mask| signature_from_mask(g, mask))
}

fn signature_from_mask(g: &Graph, mask: u64) -> SignedGraph {
    let signs = (0..g.edge_count())
        .map(|i| {
            if mask >> i & 1 == 1 {
                Sign::Negative
            } else {
                Sign::Positive
            }
        })
        .collect();
    SignedGraph::new(g.clone(), signs).expect("one sign per edge")
}

/// Random graph: each vertex pair becomes an edge independently with
/// probability `edge_prob`.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(edge_prob))
        .collect();
    Graph::build(n, &edges).expect("pairs are in range and loop-free")
}

/// Random graph with each edge independently negative with probability
/// `negative_prob`.
pub fn random_signed_graph(
    n: usize,
    edge_prob: f64,
    negative_prob: f64,
    rng: &mut impl Rng,
) -> SignedGraph {
    let g = random_graph(n, edge_prob, rng);
    let signs = (0..g.edge_count())
        .map(|_| {
            if rng.random_bool(negative_prob) {
                Sign::Negative
            } else {
                Sign::Positive
            }
        })
        .collect();
    SignedGraph::new(g, signs).expect("one sign per edge")
}

/// As [`random_signed_graph`], deterministic per seed (ChaCha8).
pub fn random_signed_graph_seeded(
    n: usize,
    edge_prob: f64,
    negative_prob: f64,
    seed: u64,
) -> SignedGraph {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_signed_graph(n, edge_prob, negative_prob, &mut rng)
}

/// Family parameters for [`verify_theorem_suite`]: all labeled graphs with
/// up to `max_n` vertices, all injective valuations over a ground set of
/// size `ground_size`, and all signatures, capped by `budget` instances.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub ground_size: u32,
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 4,
            ground_size: 3,
            budget: DEFAULT_SUITE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub instances: u64,
    pub failures: u64,
    /// First few counterexample descriptions, sorted.
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub graphs_checked: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn total_failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem verification suite")?;
        writeln!(
            f,
            "config: max_n={} ground_size={} budget={}",
            self.config.max_n, self.config.ground_size, self.config.budget
        )?;
        writeln!(f, "graphs checked: {}", self.graphs_checked)?;
        for check in &self.checks {
            writeln!(
                f,
                "  {:<20} instances={:<10} failures={}",
                check.name, check.instances, check.failures
            )?;
            for example in &check.examples {
                writeln!(f, "    counterexample: {example}")?;
            }
        }
        if self.passed() {
            write!(f, "result: PASS (0 counterexamples)")
        } else {
            write!(f, "result: FAIL ({} counterexamples)", self.total_failures())
        }
    }
}

#[derive(Debug, Default, Clone)]
struct Tally {
    instances: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn pass(&mut self) {
        self.instances += 1;
    }

    fn fail(&mut self, example: String) {
        self.instances += 1;
        self.failures += 1;
        if self.examples.len() < EXAMPLE_CAP {
            self.examples.push(example);
        }
    }

    fn record(&mut self, ok: bool, example: impl FnOnce() -> String) {
        if ok {
            self.pass();
        } else {
            self.fail(example());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self
    }

    fn into_report(mut self, name: &'static str) -> CheckReport {
        self.examples.sort_unstable();
        self.examples.truncate(EXAMPLE_CAP);
        CheckReport {
            name,
            instances: self.instances,
            failures: self.failures,
            examples: self.examples,
        }
    }
}

#[derive(Debug, Default, Clone)]
struct Tallies {
    sign_parity: Tally,
    induced_balance: Tally,
    parity_cluster: Tally,
    signature_labeling: Tally,
    eulerian_parity: Tally,
}

impl Tallies {
    fn merge(self, other: Tallies) -> Tallies {
        Tallies {
            sign_parity: self.sign_parity.merge(other.sign_parity),
            induced_balance: self.induced_balance.merge(other.induced_balance),
            parity_cluster: self.parity_cluster.merge(other.parity_cluster),
            signature_labeling: self.signature_labeling.merge(other.signature_labeling),
            eulerian_parity: self.eulerian_parity.merge(other.eulerian_parity),
        }
    }
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            format!("({u},{v})")
        })
        .collect();
    format!("n={} edges=[{}]", g.vertex_count(), edges.join(" "))
}

fn describe_valuation(val: &SetValuation) -> String {
    let labels: Vec<String> = val.labels().iter().map(|l| l.to_string()).collect();
    format!("labels=[{}]", labels.join(" "))
}

fn describe_signs(sg: &SignedGraph) -> String {
    let signs: String = sg.signs().iter().map(|s| s.as_char()).collect();
    format!("signs={signs}")
}

fn estimated_instances(config: &SuiteConfig) -> u128 {
    let ground = match GroundSet::new(config.ground_size) {
        Ok(g) => g,
        Err(_) => return u128::MAX,
    };
    let mut total: u128 = 0;
    for n in 1..=config.max_n {
        let pair_count = n * (n - 1) / 2;
        let graphs: u128 = 1u128 << pair_count;
        let valuations = injective_valuation_count(n, ground);
        total = total.saturating_add(graphs.saturating_mul(valuations));
        // sum over all graphs of 2^|E| = 3^(n choose 2)
        let signatures = 3u128.saturating_pow(pair_count as u32);
        total = total.saturating_add(signatures);
    }
    total
}

/// Runs every theorem check over the exhaustive family described by the
/// config:
///
/// * sign-parity — an induced edge sign is positive exactly for
///   same-parity endpoint labels;
/// * induced-balance — every induced signed graph is balanced, confirmed
///   three ways (analysis verdict, all cycle signs, partition scan);
/// * parity-cluster — the opposite-parity-edge criterion, the cluster
///   analysis on the induced graph, and the partition scan agree on
///   connected graphs;
/// * signature-labeling — a signature admits a reproducing valuation
///   exactly when the partition scan calls it balanced, with negative-cycle
///   witnesses otherwise;
/// * eulerian-parity — on Eulerian graphs the induced edge-label sizes sum
///   to an even total, evenly per decomposition cycle, and the
///   decomposition partitions the edge set.
pub fn verify_theorem_suite(config: &SuiteConfig) -> Result<SuiteReport, OracleError> {
    let ground = GroundSet::new(config.ground_size).map_err(|_| OracleError::GroundSetTooSmall {
        size: config.ground_size,
        vertex_count: config.max_n,
    })?;
    if !ground.can_label(config.max_n) {
        return Err(OracleError::GroundSetTooSmall {
            size: config.ground_size,
            vertex_count: config.max_n,
        });
    }
    let required = estimated_instances(config);
    if required > config.budget as u128 {
        return Err(OracleError::BudgetExceeded {
            required,
            budget: config.budget,
        });
    }

    let mut totals = Tallies::default();
    let mut graphs_checked = 0u64;
    for n in 1..=config.max_n {
        let pairs = vertex_pairs(n);
        let graph_count = 1u64 << pairs.len();
        graphs_checked += graph_count;
        let tallies = (0..graph_count)
            .into_par_iter()
            .map(|mask| check_one_graph(n, &pairs, mask, ground, config.budget))
            .try_reduce(Tallies::default, |a, b| Ok(a.merge(b)))?;
        totals = totals.merge(tallies);
    }

    Ok(SuiteReport {
        config: *config,
        graphs_checked,
        checks: vec![
            totals.sign_parity.into_report("sign-parity"),
            totals.induced_balance.into_report("induced-balance"),
            totals.parity_cluster.into_report("parity-cluster"),
            totals.signature_labeling.into_report("signature-labeling"),
            totals.eulerian_parity.into_report("eulerian-parity"),
        ],
    })
}

fn check_one_graph(
    n: usize,
    pairs: &[(VertexId, VertexId)],
    mask: u64,
    ground: GroundSet,
    budget: u64,
) -> Result<Tallies, OracleError> {
    let g = graph_from_mask(n, pairs, mask);
    let cycles = g.enumerate_cycles_with_budget(budget.min(usize::MAX as u64) as usize)?;
    let connected = g.is_connected();
    let eulerian = is_eulerian(&g);
    let mut tallies = Tallies::default();

    if eulerian {
        let decomposition = eulerian_cycle_decomposition(&g).expect("graph is Eulerian");
        tallies.eulerian_parity.record(
            decomposition.partitions_edges_of(&g),
            || format!("{}: decomposition does not partition E", describe_graph(&g)),
        );
    }

    for val in exhaustive_valuations(n, ground, budget)? {
        let sg = induce_signed_graph(&g, &val).expect("valuation covers the graph");

        let parity_matches_sign = sg.edge_signs().all(|(e, s)| {
            let (u, v) = e.endpoints();
            s.is_positive() == val.label(u).same_parity(val.label(v))
        });
        tallies.sign_parity.record(parity_matches_sign, || {
            format!(
                "{} {}: edge sign disagrees with label parity",
                describe_graph(&g),
                describe_valuation(&val)
            )
        });

        let analysis_balanced = check_balance(&sg).is_balanced();
        let cycles_positive = cycles
            .iter()
            .all(|c| sg.cycle_sign(c).expect("cycle of g").is_positive());
        let scan_balanced = brute_balance(&sg)?;
        tallies
            .induced_balance
            .record(analysis_balanced && cycles_positive && scan_balanced, || {
                format!(
                    "{} {}: induced graph not balanced (analysis={analysis_balanced} \
                     cycles={cycles_positive} scan={scan_balanced})",
                    describe_graph(&g),
                    describe_valuation(&val)
                )
            });

        if connected {
            let by_parity = two_clusterable_by_parity(&g, &val).expect("graph is connected");
            let by_analysis = check_two_clusterable(&sg)
                .expect("graph is connected")
                .is_clusterable();
            let by_scan = brute_two_cluster(&sg)?;
            tallies
                .parity_cluster
                .record(by_parity == by_analysis && by_analysis == by_scan, || {
                    format!(
                        "{} {}: clusterability disagreement (parity={by_parity} \
                         analysis={by_analysis} scan={by_scan})",
                        describe_graph(&g),
                        describe_valuation(&val)
                    )
                });
        }

        if eulerian {
            let report = eulerian_label_sum_relaxed(&g, &val).expect("graph is Eulerian");
            tallies.eulerian_parity.record(
                report.total_is_even() && report.all_cycle_sums_even(),
                || {
                    format!(
                        "{} {}: odd label sum (total={})",
                        describe_graph(&g),
                        describe_valuation(&val),
                        report.total
                    )
                },
            );
        }
    }

    for sg in all_signatures(&g) {
        let scan_balanced = brute_balance(&sg)?;
        let analysis_balanced = check_balance(&sg).is_balanced();
        match balance_compatible_labeling(&sg) {
            LabelingOutcome::Valuation(val) => {
                let reinduced = induce_signed_graph(&g, &val).expect("valuation covers the graph");
                tallies.signature_labeling.record(
                    scan_balanced && analysis_balanced && reinduced == sg,
                    || {
                        format!(
                            "{} {}: labeling produced but scan_balanced={scan_balanced}, \
                             round-trip={}",
                            describe_graph(&g),
                            describe_signs(&sg),
                            reinduced == sg
                        )
                    },
                );
            }
            LabelingOutcome::Unbalanced(cycle) => {
                let witness_negative = sg.cycle_sign(&cycle) == Ok(Sign::Negative);
                tallies.signature_labeling.record(
                    !scan_balanced && !analysis_balanced && witness_negative,
                    || {
                        format!(
                            "{} {}: unbalanced verdict but scan_balanced={scan_balanced}, \
                             witness_negative={witness_negative}",
                            describe_graph(&g),
                            describe_signs(&sg)
                        )
                    },
                );
            }
        }
    }

    Ok(tallies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use std::collections::HashMap;

    use Sign::{Negative as N, Positive as P};

    fn triangle_signed(signs: [Sign; 3]) -> SignedGraph {
        let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let mut map = HashMap::new();
        map.insert(Edge::new(0, 1), signs[0]);
        map.insert(Edge::new(1, 2), signs[1]);
        map.insert(Edge::new(2, 0), signs[2]);
        SignedGraph::from_signature_map(g, &map).unwrap()
    }

    #[test]
    fn brute_balance_on_triangles() {
        assert_eq!(brute_balance(&triangle_signed([P, P, P])), Ok(true));
        assert_eq!(brute_balance(&triangle_signed([N, N, N])), Ok(false));
        assert_eq!(brute_balance(&triangle_signed([N, N, P])), Ok(true));
    }

    #[test]
    fn brute_two_cluster_examples() {
        assert_eq!(brute_two_cluster(&triangle_signed([P, P, P])), Ok(false));
        assert_eq!(brute_two_cluster(&triangle_signed([N, N, N])), Ok(false));
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let sg = SignedGraph::new(k2, vec![N]).unwrap();
        assert_eq!(brute_two_cluster(&sg), Ok(true));
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let g = Graph::build(21, &[(0, 1)]).unwrap();
        let sg = SignedGraph::all_positive(g);
        assert!(matches!(
            brute_balance(&sg),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn exhaustive_valuation_counts() {
        let m1 = GroundSet::new(1).unwrap();
        let vals: Vec<_> = exhaustive_valuations(2, m1, 1000).unwrap().collect();
        assert_eq!(vals.len(), 2); // (∅,{1}) and ({1},∅)

        let m2 = GroundSet::new(2).unwrap();
        let vals: Vec<_> = exhaustive_valuations(2, m2, 1000).unwrap().collect();
        assert_eq!(vals.len(), 12); // 4·3 ordered pairs

        assert!(matches!(
            exhaustive_valuations(3, m1, 1000),
            Err(OracleError::GroundSetTooSmall { .. })
        ));
    }

    #[test]
    fn exhaustive_valuations_distinct_and_budgeted() {
        let m2 = GroundSet::new(2).unwrap();
        let vals: Vec<SetValuation> = exhaustive_valuations(3, m2, 1000).unwrap().collect();
        assert_eq!(vals.len(), 24); // 4·3·2
        let mut seen = std::collections::HashSet::new();
        for v in &vals {
            assert!(seen.insert(format!("{:?}", v.labels())));
        }
        assert!(matches!(
            exhaustive_valuations(3, m2, 10),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn labeled_graph_counts_match_known_values() {
        assert_eq!(labeled_graphs(3).count(), 8);
        assert_eq!(labeled_graphs(4).count(), 64);
        // connected labeled graphs: OEIS A001187
        assert_eq!(connected_labeled_graphs(1).count(), 1);
        assert_eq!(connected_labeled_graphs(2).count(), 1);
        assert_eq!(connected_labeled_graphs(3).count(), 4);
        assert_eq!(connected_labeled_graphs(4).count(), 38);
    }

    #[test]
    fn signature_enumeration_counts_balanced_cycles() {
        // C3: 4 of 8 signatures balanced; C4: 8 of 16.
        let c3 = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let balanced = all_signatures(&c3)
            .filter(|sg| brute_balance(sg).unwrap())
            .count();
        assert_eq!(balanced, 4);

        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let balanced = all_signatures(&c4)
            .filter(|sg| brute_balance(sg).unwrap())
            .count();
        assert_eq!(balanced, 8);
        // exactly the signatures with an even number of negative edges
        for sg in all_signatures(&c4) {
            assert_eq!(
                brute_balance(&sg).unwrap(),
                sg.negative_edge_count() % 2 == 0
            );
        }
    }

    #[test]
    fn suite_passes_on_tiny_family() {
        let config = SuiteConfig {
            max_n: 3,
            ground_size: 2,
            budget: 100_000,
        };
        let report = verify_theorem_suite(&config).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.graphs_checked, 1 + 2 + 8);
        assert!(report.to_json().contains("\"failures\": 0"));
    }

    #[test]
    fn suite_passes_on_default_family() {
        let report = verify_theorem_suite(&SuiteConfig::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.graphs_checked, 1 + 2 + 8 + 64);
        let by_name: std::collections::HashMap<&str, u64> = report
            .checks
            .iter()
            .map(|c| (c.name, c.instances))
            .collect();
        // graphs(n) · perm(2^3, n) summed over n = 1..=4
        assert_eq!(by_name["sign-parity"], 8 + 2 * 56 + 8 * 336 + 64 * 1680);
        // sum of 3^(n choose 2)
        assert_eq!(by_name["signature-labeling"], 1 + 3 + 27 + 729);
    }

    #[test]
    fn suite_enforces_budget() {
        let config = SuiteConfig {
            max_n: 4,
            ground_size: 3,
            budget: 100,
        };
        assert!(matches!(
            verify_theorem_suite(&config),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }
}
