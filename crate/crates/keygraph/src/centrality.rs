//! Node centralities over the candidate graph, plus final ranking.
//!
//! Shortest-path measures convert edge weights to traversal costs via
//! [`DistanceMode`]. PageRank-style measures treat weights as transition
//! propensities. All iterative measures are deterministic.

use std::collections::BinaryHeap;

use nalgebra::DMatrix;

use crate::config::{CentralityKind, DistanceMode};
use crate::error::{Error, Result};
use crate::graph::{cosine, DualVectors, KeyGraph};
use crate::text::Candidate;

/// Convergence tolerance (max-norm) for power-method iterations.
pub const ITERATION_TOLERANCE: f64 = 1e-10;
/// Iteration cap for power-method iterations.
pub const MAX_ITERATIONS: usize = 1000;
/// Lower bound on one-minus-weight traversal costs.
const ONE_MINUS_FLOOR: f64 = 1e-9;

/// Options shared by the centrality measures.
#[derive(Debug, Clone)]
pub struct CentralityOptions {
    pub damping: f64,
    pub weighted_pagerank: bool,
    pub weighted_degree: bool,
    pub distance: DistanceMode,
    pub subgraph_cap: usize,
}

impl Default for CentralityOptions {
    fn default() -> Self {
        CentralityOptions {
            damping: 0.85,
            weighted_pagerank: true,
            weighted_degree: false,
            distance: DistanceMode::Inverse,
            subgraph_cap: 5000,
        }
    }
}

/// Traversal cost of an edge with the given weight.
fn edge_cost(weight: f64, mode: DistanceMode) -> f64 {
    match mode {
        DistanceMode::Inverse => 1.0 / weight,
        DistanceMode::OneMinus => (1.0 - weight).max(ONE_MINUS_FLOOR),
    }
}

/// Min-heap entry ordered by distance, ties by node id.
#[derive(PartialEq)]
struct HeapEntry {
    dist: f64,
    node: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .dist
            .partial_cmp(&self.dist)
            .expect("distances are never NaN")
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra distances from `source`; unreachable nodes get infinity.
fn shortest_path_distances(graph: &KeyGraph, source: usize, mode: DistanceMode) -> Vec<f64> {
    let n = graph.node_count();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        node: source,
    });
    while let Some(HeapEntry { dist: d, node: v }) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(w, weight) in graph.neighbors(v) {
            let nd = dist[v] + edge_cost(weight, mode);
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(HeapEntry { dist: nd, node: w });
            }
        }
    }
    dist
}

/// Degree centrality: incident edge count, or incident weight sum when
/// `weighted` is set.
pub fn degree_centrality(graph: &KeyGraph, weighted: bool) -> Vec<f64> {
    (0..graph.node_count())
        .map(|i| {
            if weighted {
                graph.strength(i)
            } else {
                graph.degree(i) as f64
            }
        })
        .collect()
}

/// Closeness centrality in the reachable-rescaled form: with r nodes
/// reachable from i (including i) and total distance S to them,
/// ((r - 1) / S) * ((r - 1) / (n - 1)). Isolated nodes score 0.
pub fn closeness_centrality(graph: &KeyGraph, mode: DistanceMode) -> Vec<f64> {
    let n = graph.node_count();
    (0..n)
        .map(|i| {
            let dist = shortest_path_distances(graph, i, mode);
            let mut reachable = 0usize;
            let mut total = 0.0;
            for (j, &d) in dist.iter().enumerate() {
                if d.is_finite() {
                    reachable += 1;
                    if j != i {
                        total += d;
                    }
                }
            }
            if reachable <= 1 || total == 0.0 || n <= 1 {
                0.0
            } else {
                let r = (reachable - 1) as f64;
                (r / total) * (r / (n - 1) as f64)
            }
        })
        .collect()
}

/// Harmonic centrality: sum of reciprocal distances to all other nodes.
pub fn harmonic_centrality(graph: &KeyGraph, mode: DistanceMode) -> Vec<f64> {
    let n = graph.node_count();
    (0..n)
        .map(|i| {
            let dist = shortest_path_distances(graph, i, mode);
            dist.iter()
                .enumerate()
                .filter(|&(j, d)| j != i && d.is_finite())
                .map(|(_, d)| 1.0 / d)
                .sum()
        })
        .collect()
}

/// Betweenness centrality via Brandes' algorithm with Dijkstra, endpoints
/// excluded, halved for the undirected double count.
pub fn betweenness_centrality(graph: &KeyGraph, mode: DistanceMode) -> Vec<f64> {
    let n = graph.node_count();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        let mut dist = vec![f64::INFINITY; n];
        let mut sigma = vec![0.0f64; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut settled = vec![false; n];

        dist[s] = 0.0;
        sigma[s] = 1.0;
        let mut heap = BinaryHeap::new();
        heap.push(HeapEntry { dist: 0.0, node: s });
        while let Some(HeapEntry { dist: d, node: v }) = heap.pop() {
            if settled[v] || d > dist[v] {
                continue;
            }
            settled[v] = true;
            order.push(v);
            for &(w, weight) in graph.neighbors(v) {
                let nd = dist[v] + edge_cost(weight, mode);
                if nd < dist[w] {
                    dist[w] = nd;
                    sigma[w] = sigma[v];
                    preds[w].clear();
                    preds[w].push(v);
                    heap.push(HeapEntry { dist: nd, node: w });
                } else if nd == dist[w] {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }

        let mut delta = vec![0.0f64; n];
        for &v in order.iter().rev() {
            for &u in &preds[v] {
                delta[u] += sigma[u] / sigma[v] * (1.0 + delta[v]);
            }
            if v != s {
                bc[v] += delta[v];
            }
        }
    }
    for value in &mut bc {
        *value /= 2.0;
    }
    bc
}

/// Subgraph centrality: diagonal of exp(A) via dense symmetric
/// eigendecomposition. Errors above the node cap.
pub fn subgraph_centrality(graph: &KeyGraph, cap: usize) -> Result<Vec<f64>> {
    let n = graph.node_count();
    if n > cap {
        return Err(Error::GraphTooLarge { nodes: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for edge in graph.edges() {
        a[(edge.i, edge.j)] = edge.weight;
        a[(edge.j, edge.i)] = edge.weight;
    }
    let eigen = a.symmetric_eigen();
    let mut scores = vec![0.0; n];
    for k in 0..n {
        let scale = eigen.eigenvalues[k].exp();
        let column = eigen.eigenvectors.column(k);
        for i in 0..n {
            scores[i] += column[i] * column[i] * scale;
        }
    }
    Ok(scores)
}

/// Result of a power iteration.
#[derive(Debug, Clone)]
pub struct PowerIterationOutcome {
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Eigenvector centrality by power iteration on A + I (the shift keeps
/// bipartite graphs from oscillating without changing eigenvectors).
///
/// Scores have unit Euclidean norm and the largest-magnitude component is
/// made positive. If the iteration cap is hit, the last iterate is
/// returned with `converged` false.
pub fn eigenvector_centrality(graph: &KeyGraph) -> PowerIterationOutcome {
    let n = graph.node_count();
    if n == 0 {
        return PowerIterationOutcome {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
        };
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut next = x.clone();
        for (i, value) in next.iter_mut().enumerate() {
            for &(j, weight) in graph.neighbors(i) {
                *value += weight * x[j];
            }
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            for value in &mut next {
                *value /= norm;
            }
        }
        let diff = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        x = next;
        if diff < ITERATION_TOLERANCE {
            converged = true;
            break;
        }
    }

    let lead = x
        .iter()
        .enumerate()
        .max_by(|a, b| {
            a.1.abs()
                .partial_cmp(&b.1.abs())
                .expect("scores are never NaN")
                .then_with(|| b.0.cmp(&a.0))
        })
        .map(|(i, _)| i)
        .expect("graph is non-empty");
    if x[lead] < 0.0 {
        for value in &mut x {
            *value = -*value;
        }
    }
    PowerIterationOutcome {
        scores: x,
        iterations,
        converged,
    }
}

/// Shared PageRank iteration with an arbitrary teleport distribution.
/// `teleport` must be non-negative and sum to 1.
fn pagerank_iterate(
    graph: &KeyGraph,
    damping: f64,
    weighted: bool,
    teleport: &[f64],
) -> PowerIterationOutcome {
    let n = graph.node_count();
    if n == 0 {
        return PowerIterationOutcome {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
        };
    }
    // out_norm[j]: total outgoing propensity of j (strength or degree).
    let out_norm: Vec<f64> = (0..n)
        .map(|j| {
            if weighted {
                graph.strength(j)
            } else {
                graph.degree(j) as f64
            }
        })
        .collect();

    let mut x = vec![1.0 / n as f64; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let dangling: f64 = (0..n)
            .filter(|&j| out_norm[j] == 0.0)
            .map(|j| x[j])
            .sum();
        let mut next = vec![0.0; n];
        for (i, value) in next.iter_mut().enumerate() {
            let mut inflow = 0.0;
            for &(j, weight) in graph.neighbors(i) {
                let share = if weighted {
                    weight / out_norm[j]
                } else {
                    1.0 / out_norm[j]
                };
                inflow += x[j] * share;
            }
            *value = (1.0 - damping) * teleport[i] + damping * (inflow + dangling / n as f64);
        }
        let diff = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        x = next;
        if diff < ITERATION_TOLERANCE {
            converged = true;
            break;
        }
    }
    PowerIterationOutcome {
        scores: x,
        iterations,
        converged,
    }
}

/// PageRank with uniform teleport. Weighted mode splits a node's outflow
/// in proportion to edge weights; unweighted mode splits it evenly.
/// Dangling nodes spread their mass uniformly. Scores sum to 1.
pub fn pagerank(graph: &KeyGraph, damping: f64, weighted: bool) -> PowerIterationOutcome {
    let n = graph.node_count();
    if n == 0 {
        return PowerIterationOutcome {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
        };
    }
    let teleport = vec![1.0 / n as f64; n];
    pagerank_iterate(graph, damping, weighted, &teleport)
}

/// PageRank with a custom teleport distribution. Negative entries are
/// clipped to zero; an all-zero vector falls back to uniform. Dangling
/// mass still spreads uniformly.
pub fn personalized_pagerank_with_teleport(
    graph: &KeyGraph,
    damping: f64,
    weighted: bool,
    teleport_weights: &[f64],
) -> Result<PowerIterationOutcome> {
    let n = graph.node_count();
    if teleport_weights.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} teleport weights for {} nodes",
            teleport_weights.len(),
            n
        )));
    }
    if n == 0 {
        return Ok(PowerIterationOutcome {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
        });
    }
    let clipped: Vec<f64> = teleport_weights.iter().map(|&w| w.max(0.0)).collect();
    let total: f64 = clipped.iter().sum();
    let teleport: Vec<f64> = if total > 0.0 {
        clipped.into_iter().map(|w| w / total).collect()
    } else {
        vec![1.0 / n as f64; n]
    };
    Ok(pagerank_iterate(graph, damping, weighted, &teleport))
}

/// Personalized PageRank with teleport weights from document relevance:
/// the product of each candidate's local and global cosine to the document
/// vectors, clipped at zero.
pub fn personalized_pagerank(
    graph: &KeyGraph,
    damping: f64,
    weighted: bool,
    candidate_vectors: &[DualVectors],
) -> Result<PowerIterationOutcome> {
    if candidate_vectors.len() != graph.node_count() {
        return Err(Error::InvalidInput(format!(
            "{} vector pairs for {} nodes",
            candidate_vectors.len(),
            graph.node_count()
        )));
    }
    let doc = graph.doc_vectors();
    let mut weights = Vec::with_capacity(candidate_vectors.len());
    for vectors in candidate_vectors {
        let relevance = cosine(&vectors.local, &doc.local)? * cosine(&vectors.global, &doc.global)?;
        weights.push(relevance);
    }
    personalized_pagerank_with_teleport(graph, damping, weighted, &weights)
}

/// Computes the requested measure. Personalized PageRank needs the
/// candidate vectors; other measures ignore them.
pub fn compute_centrality(
    graph: &KeyGraph,
    kind: CentralityKind,
    options: &CentralityOptions,
    candidate_vectors: &[DualVectors],
) -> Result<Vec<f64>> {
    let scores = match kind {
        CentralityKind::Degree => degree_centrality(graph, options.weighted_degree),
        CentralityKind::Closeness => closeness_centrality(graph, options.distance),
        CentralityKind::Harmonic => harmonic_centrality(graph, options.distance),
        CentralityKind::Betweenness => betweenness_centrality(graph, options.distance),
        CentralityKind::Subgraph => subgraph_centrality(graph, options.subgraph_cap)?,
        CentralityKind::Eigenvector => {
            let outcome = eigenvector_centrality(graph);
            if !outcome.converged {
                log::warn!(
                    "eigenvector centrality did not converge in {} iterations",
                    outcome.iterations
                );
            }
            outcome.scores
        }
        CentralityKind::PageRank => {
            let outcome = pagerank(graph, options.damping, options.weighted_pagerank);
            if !outcome.converged {
                log::warn!(
                    "pagerank did not converge in {} iterations",
                    outcome.iterations
                );
            }
            outcome.scores
        }
        CentralityKind::PersonalizedPageRank => {
            let outcome = personalized_pagerank(
                graph,
                options.damping,
                options.weighted_pagerank,
                candidate_vectors,
            )?;
            if !outcome.converged {
                log::warn!(
                    "personalized pagerank did not converge in {} iterations",
                    outcome.iterations
                );
            }
            outcome.scores
        }
    };
    Ok(scores)
}

/// A candidate with its centrality score and 1-based rank.
#[derive(Debug, Clone)]
pub struct ScoredCandidate {
    pub candidate: Candidate,
    pub score: f64,
    pub rank: usize,
}

/// Ranks candidates by score (descending) and keeps the top `top_n`.
/// Ties break by earliest first occurrence, then by phrase.
pub fn rank_and_select(
    candidates: &[Candidate],
    scores: &[f64],
    top_n: usize,
) -> Vec<ScoredCandidate> {
    debug_assert_eq!(candidates.len(), scores.len());
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("scores are never NaN")
            .then_with(|| candidates[a].first_position.cmp(&candidates[b].first_position))
            .then_with(|| candidates[a].words.cmp(&candidates[b].words))
    });
    order
        .into_iter()
        .take(top_n)
        .enumerate()
        .map(|(rank, idx)| ScoredCandidate {
            candidate: candidates[idx].clone(),
            score: scores[idx],
            rank: rank + 1,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> KeyGraph {
        KeyGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap()
    }

    fn star4() -> KeyGraph {
        KeyGraph::from_edges(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap()
    }

    #[test]
    fn degree_plain_and_weighted() {
        let g = KeyGraph::from_edges(3, &[(0, 1, 2.0), (1, 2, 0.5)]).unwrap();
        assert_eq!(degree_centrality(&g, false), vec![1.0, 2.0, 1.0]);
        assert_eq!(degree_centrality(&g, true), vec![2.0, 2.5, 0.5]);
    }

    #[test]
    fn closeness_on_unit_path() {
        let scores = closeness_centrality(&path3(), DistanceMode::Inverse);
        assert!((scores[0] - 2.0 / 3.0).abs() < 1e-12);
        assert!((scores[1] - 1.0).abs() < 1e-12);
        assert!((scores[2] - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn closeness_rescales_for_disconnected_components() {
        // Edge plus an isolated node: endpoints reach 1 of 2 others.
        let g = KeyGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let scores = closeness_centrality(&g, DistanceMode::Inverse);
        assert!((scores[0] - 0.5).abs() < 1e-12);
        assert_eq!(scores[2], 0.0);
    }

    #[test]
    fn harmonic_on_unit_path() {
        let scores = harmonic_centrality(&path3(), DistanceMode::Inverse);
        assert!((scores[0] - 1.5).abs() < 1e-12);
        assert!((scores[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn stronger_edges_are_shorter_under_inverse_distance() {
        // 0-1 strong (cost 0.5), 1-2 weak (cost 2).
        let g = KeyGraph::from_edges(3, &[(0, 1, 2.0), (1, 2, 0.5)]).unwrap();
        let scores = harmonic_centrality(&g, DistanceMode::Inverse);
        // Node 0: 1/0.5 + 1/2.5; node 2: 1/2 + 1/2.5.
        assert!((scores[0] - (2.0 + 0.4)).abs() < 1e-12);
        assert!((scores[2] - (0.5 + 0.4)).abs() < 1e-12);
    }

    #[test]
    fn one_minus_distance_mode_is_floored() {
        let g = KeyGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let scores = harmonic_centrality(&g, DistanceMode::OneMinus);
        // Cost floors at 1e-9, so the reciprocal is 1e9.
        assert!((scores[0] - 1e9).abs() < 1.0);
    }

    #[test]
    fn betweenness_path_and_star() {
        let scores = betweenness_centrality(&path3(), DistanceMode::Inverse);
        assert_eq!(scores, vec![0.0, 1.0, 0.0]);

        let scores = betweenness_centrality(&star4(), DistanceMode::Inverse);
        assert_eq!(scores, vec![3.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn betweenness_splits_over_tied_paths() {
        // Square: two equal paths between opposite corners.
        let g = KeyGraph::from_edges(
            4,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)],
        )
        .unwrap();
        let scores = betweenness_centrality(&g, DistanceMode::Inverse);
        assert_eq!(scores, vec![0.5, 0.5, 0.5, 0.5]);
    }

    #[test]
    fn subgraph_two_node_closed_form() {
        let g = KeyGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let scores = subgraph_centrality(&g, 100).unwrap();
        assert!((scores[0] - 1.0f64.cosh()).abs() < 1e-10);
        assert!((scores[1] - 1.0f64.cosh()).abs() < 1e-10);
    }

    #[test]
    fn subgraph_empty_graph_scores_one() {
        let g = KeyGraph::from_edges(3, &[]).unwrap();
        let scores = subgraph_centrality(&g, 100).unwrap();
        for s in scores {
            assert!((s - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn subgraph_cap_is_enforced() {
        let g = KeyGraph::from_edges(10, &[(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            subgraph_centrality(&g, 5),
            Err(Error::GraphTooLarge { nodes: 10, cap: 5 })
        ));
    }

    #[test]
    fn eigenvector_star_ratio() {
        let outcome = eigenvector_centrality(&star4());
        assert!(outcome.converged);
        let scores = outcome.scores;
        let norm: f64 = scores.iter().map(|s| s * s).sum();
        assert!((norm - 1.0).abs() < 1e-9);
        // Center = sqrt(3) x leaf for a 3-leaf star.
        assert!((scores[0] / scores[1] - 3.0f64.sqrt()).abs() < 1e-6);
        assert!(scores.iter().all(|&s| s > 0.0));
    }

    #[test]
    fn eigenvector_handles_bipartite_graphs() {
        // A single edge is bipartite; the shift keeps iteration stable.
        let g = KeyGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let outcome = eigenvector_centrality(&g);
        assert!(outcome.converged);
        let s = outcome.scores;
        assert!((s[0] - s[1]).abs() < 1e-9);
        assert!((s[0] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn pagerank_sums_to_one_and_is_uniform_on_cycles() {
        let g = KeyGraph::from_edges(
            4,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)],
        )
        .unwrap();
        let outcome = pagerank(&g, 0.85, true);
        assert!(outcome.converged);
        let sum: f64 = outcome.scores.iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);
        for &s in &outcome.scores {
            assert!((s - 0.25).abs() < 1e-9);
        }
    }

    #[test]
    fn pagerank_weighted_mode_follows_strong_edges() {
        // Node 0 connects strongly to 1, weakly to 2.
        let g = KeyGraph::from_edges(3, &[(0, 1, 10.0), (0, 2, 0.1)]).unwrap();
        let weighted = pagerank(&g, 0.85, true).scores;
        let unweighted = pagerank(&g, 0.85, false).scores;
        assert!(weighted[1] > weighted[2]);
        assert!((unweighted[1] - unweighted[2]).abs() < 1e-12);
    }

    #[test]
    fn pagerank_handles_isolated_nodes() {
        let g = KeyGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let outcome = pagerank(&g, 0.85, true);
        assert!(outcome.converged);
        let sum: f64 = outcome.scores.iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);
        assert!(outcome.scores[2] > 0.0);
        assert!(outcome.scores[0] > outcome.scores[2]);
    }

    #[test]
    fn personalized_teleport_concentrates_mass() {
        // Two disconnected edges; teleport only into the first.
        let g = KeyGraph::from_edges(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let outcome =
            personalized_pagerank_with_teleport(&g, 0.85, true, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(outcome.converged);
        let scores = outcome.scores;
        assert!(scores[0] > 0.4 && scores[1] > 0.4);
        assert!(scores[2] < 1e-9 && scores[3] < 1e-9);
    }

    #[test]
    fn personalized_teleport_clips_negatives_and_falls_back_to_uniform() {
        let g = KeyGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let clipped =
            personalized_pagerank_with_teleport(&g, 0.85, true, &[1.0, -5.0]).unwrap();
        assert!(clipped.scores[0] > clipped.scores[1]);

        let uniform =
            personalized_pagerank_with_teleport(&g, 0.85, true, &[-1.0, -2.0]).unwrap();
        assert!((uniform.scores[0] - 0.5).abs() < 1e-9);

        assert!(personalized_pagerank_with_teleport(&g, 0.85, true, &[1.0]).is_err());
    }

    #[test]
    fn rank_and_select_orders_and_breaks_ties() {
        let make = |phrase: &str, pos: usize| Candidate {
            words: phrase.split(' ').map(str::to_owned).collect(),
            count: 1,
            first_position: pos,
            positions: vec![pos],
        };
        let candidates = vec![
            make("late tie", 9),
            make("winner", 4),
            make("early tie", 2),
            make("alpha tie", 2),
        ];
        let scores = vec![0.5, 0.9, 0.5, 0.5];
        let ranked = rank_and_select(&candidates, &scores, 3);
        assert_eq!(ranked.len(), 3);
        assert_eq!(ranked[0].candidate.phrase(), "winner");
        assert_eq!(ranked[0].rank, 1);
        // Ties: earlier position first, then alphabetical.
        assert_eq!(ranked[1].candidate.phrase(), "alpha tie");
        assert_eq!(ranked[2].candidate.phrase(), "early tie");
    }
}
