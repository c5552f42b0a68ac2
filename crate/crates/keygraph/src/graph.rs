//! Candidate graph construction.
//!
//! Nodes are candidate phrases. Edge weights combine similarities measured
//! in two embedding spaces: the document-specific local space and the
//! pretrained global space. Eight weighting functions are supported:
//!
//! | id | local factor | global factor | compared vectors             |
//! |----|--------------|---------------|------------------------------|
//! | 1  | plain        | plain         | candidate pair               |
//! | 2  | plain        | amplified     | candidate pair               |
//! | 3  | amplified    | plain         | candidate pair               |
//! | 4  | amplified    | amplified     | candidate pair               |
//! | 5  | plain        | plain         | pair sum vs. document vector |
//! | 6  | plain        | amplified     | pair sum vs. document vector |
//! | 7  | amplified    | plain         | pair sum vs. document vector |
//! | 8  | amplified    | amplified     | pair sum vs. document vector |
//!
//! "Plain" is the cosine itself; "amplified" is 1/(1 - cos), with the
//! cosine clamped below 1 to keep the value finite. An edge exists only
//! when both governing cosines are strictly positive.

use std::io::Write;

use crate::error::{Error, Result};
use crate::text::Candidate;
use crate::vector::DenseVector;

/// Cosines are clamped to 1 - AMPLIFY_EPSILON inside the amplified factor.
pub const AMPLIFY_EPSILON: f64 = 1e-6;

/// Cosine similarity; zero vectors have similarity 0 to everything.
pub fn cosine(a: &DenseVector, b: &DenseVector) -> Result<f64> {
    let dot = a.dot(b)?;
    let norms = a.norm() * b.norm();
    if norms == 0.0 {
        Ok(0.0)
    } else {
        Ok(dot / norms)
    }
}

/// Plain similarity factor: the cosine unchanged.
pub fn plain_factor(cos: f64) -> f64 {
    cos
}

/// Amplified similarity factor: 1/(1 - cos), clamped near cos = 1.
pub fn amplified_factor(cos: f64) -> f64 {
    1.0 / (1.0 - cos.min(1.0 - AMPLIFY_EPSILON))
}

/// A candidate's vector in both embedding spaces.
#[derive(Debug, Clone)]
pub struct DualVectors {
    pub local: DenseVector,
    pub global: DenseVector,
}

/// Edge weight under the given function, or None when no edge exists.
///
/// For ids 1..=4 the governing cosines are between the two candidates in
/// each space; for 5..=8 they are between the pair's summed vector and the
/// document vector. No edge exists unless both are strictly positive.
pub fn edge_weight(
    function_id: u8,
    first: &DualVectors,
    second: &DualVectors,
    doc: &DualVectors,
) -> Result<Option<f64>> {
    let (local_cos, global_cos) = match function_id {
        1..=4 => (
            cosine(&first.local, &second.local)?,
            cosine(&first.global, &second.global)?,
        ),
        5..=8 => {
            let mut local_sum = first.local.clone();
            local_sum.add_assign(&second.local)?;
            let mut global_sum = first.global.clone();
            global_sum.add_assign(&second.global)?;
            (
                cosine(&local_sum, &doc.local)?,
                cosine(&global_sum, &doc.global)?,
            )
        }
        other => return Err(Error::InvalidFunctionId(other)),
    };

    if local_cos <= 0.0 || global_cos <= 0.0 {
        return Ok(None);
    }

    let weight = match (function_id - 1) % 4 {
        0 => plain_factor(local_cos) * plain_factor(global_cos),
        1 => plain_factor(local_cos) * amplified_factor(global_cos),
        2 => amplified_factor(local_cos) * plain_factor(global_cos),
        _ => amplified_factor(local_cos) * amplified_factor(global_cos),
    };
    Ok(Some(weight))
}

/// Undirected weighted edge between node indices `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

/// Undirected weighted graph over candidate phrases.
#[derive(Debug, Clone)]
pub struct KeyGraph {
    nodes: Vec<Candidate>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, f64)>>,
    function_id: u8,
    doc_vectors: DualVectors,
}

/// Builds the graph by weighting every candidate pair.
pub fn build_graph(
    candidates: Vec<Candidate>,
    vectors: &[DualVectors],
    doc_vectors: DualVectors,
    function_id: u8,
) -> Result<KeyGraph> {
    if !(1..=8).contains(&function_id) {
        return Err(Error::InvalidFunctionId(function_id));
    }
    if candidates.len() != vectors.len() {
        return Err(Error::InvalidInput(format!(
            "{} candidates but {} vector pairs",
            candidates.len(),
            vectors.len()
        )));
    }

    let n = candidates.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if let Some(weight) = edge_weight(function_id, &vectors[i], &vectors[j], &doc_vectors)?
            {
                edges.push(Edge { i, j, weight });
                adjacency[i].push((j, weight));
                adjacency[j].push((i, weight));
            }
        }
    }

    Ok(KeyGraph {
        nodes: candidates,
        edges,
        adjacency,
        function_id,
        doc_vectors,
    })
}

impl KeyGraph {
    /// Builds a graph over the given candidates from an explicit edge
    /// list, for graphs whose weights do not come from embeddings (for
    /// example co-occurrence counts).
    pub fn with_candidates(
        candidates: Vec<Candidate>,
        edge_list: &[(usize, usize, f64)],
    ) -> Result<KeyGraph> {
        let node_count = candidates.len();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); node_count];
        for &(i, j, weight) in edge_list {
            if i == j {
                return Err(Error::InvalidInput(format!("self-loop on node {i}")));
            }
            if i >= node_count || j >= node_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) outside 0..{node_count}"
                )));
            }
            if weight <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) has non-positive weight {weight}"
                )));
            }
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            edges.push(Edge { i, j, weight });
            adjacency[i].push((j, weight));
            adjacency[j].push((i, weight));
        }
        Ok(KeyGraph {
            nodes: candidates,
            edges,
            adjacency,
            function_id: 1,
            doc_vectors: DualVectors {
                local: DenseVector::zeros(1),
                global: DenseVector::zeros(1),
            },
        })
    }

    /// Builds a graph directly from an edge list; nodes are `0..node_count`
    /// with placeholder phrases. Intended for centrality work on graphs
    /// that do not come from text.
    pub fn from_edges(node_count: usize, edge_list: &[(usize, usize, f64)]) -> Result<KeyGraph> {
        let placeholders = (0..node_count)
            .map(|i| Candidate {
                words: vec![format!("node{i}")],
                count: 1,
                first_position: i,
                positions: vec![i],
            })
            .collect();
        KeyGraph::with_candidates(placeholders, edge_list)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.nodes
    }

    pub fn candidate(&self, i: usize) -> &Candidate {
        &self.nodes[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `i` with edge weights, in ascending neighbor order.
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adjacency[i]
    }

    /// Number of incident edges.
    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// Sum of incident edge weights.
    pub fn strength(&self, i: usize) -> f64 {
        self.adjacency[i].iter().map(|&(_, w)| w).sum()
    }

    pub fn function_id(&self) -> u8 {
        self.function_id
    }

    pub fn doc_vectors(&self) -> &DualVectors {
        &self.doc_vectors
    }

    /// Writes the edge list as `i<TAB>j<TAB>weight` lines with six-decimal
    /// weights.
    pub fn write_edge_list<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        for edge in &self.edges {
            writeln!(out, "{}\t{}\t{:.6}", edge.i, edge.j, edge.weight)?;
        }
        Ok(())
    }
}
