//! End-to-end extraction: normalize, tag, collect candidates, train the
//! local embedding, look up global vectors, build the graph, rank by
//! centrality.

use crate::centrality::{compute_centrality, rank_and_select, CentralityOptions, ScoredCandidate};
use crate::config::ExtractionConfig;
use crate::corpus::load_vector_table;
use crate::embedding::{
    document_local_vector, phrase_local_vector, train_local, GlobalSource, OovReport,
};
use crate::error::Result;
use crate::graph::{build_graph, DualVectors, KeyGraph};
use crate::text::{
    extract_candidates, filter_outliers, preprocess, tokenize_and_tag, Candidate, CandidateMode,
    LexiconTagger, PerceptronTagger, Tagger,
};
use crate::vector::DenseVector;

/// Everything produced while extracting keyphrases from one document.
#[derive(Debug)]
pub struct ExtractionOutcome {
    /// Top-ranked phrases, best first.
    pub keyphrases: Vec<ScoredCandidate>,
    /// Graph node order matches candidate order.
    pub graph: KeyGraph,
    /// Centrality score per graph node.
    pub scores: Vec<f64>,
    /// Per-node vectors in both spaces, aligned with the graph nodes.
    pub vectors: Vec<DualVectors>,
    /// The document's normalized token stream.
    pub tokens: Vec<String>,
    /// Global-vocabulary coverage over the candidates.
    pub oov: OovReport,
    /// Local training loss per epoch (empty if nothing was trained).
    pub training_losses: Vec<f64>,
}

impl ExtractionOutcome {
    fn empty(dimension: usize, function_id: u8, tokens: Vec<String>) -> Self {
        let doc = DualVectors {
            local: DenseVector::zeros(dimension),
            global: DenseVector::zeros(dimension),
        };
        let graph = build_graph(Vec::new(), &[], doc, function_id)
            .expect("empty graph construction cannot fail");
        ExtractionOutcome {
            keyphrases: Vec::new(),
            graph,
            scores: Vec::new(),
            vectors: Vec::new(),
            tokens,
            oov: OovReport::default(),
            training_losses: Vec::new(),
        }
    }
}

/// Reusable extraction state: configuration, tagger, and the shared global
/// vector source. One context serves many documents, from many threads.
pub struct PipelineContext {
    config: ExtractionConfig,
    tagger: Box<dyn Tagger>,
    global: Option<GlobalSource>,
}

impl PipelineContext {
    /// Builds a context from the configuration alone: the tagger model and
    /// global vector table are loaded from their configured paths. Without
    /// a tagger model the rule-based tagger is used; without global
    /// vectors each document's local model doubles as its global source.
    pub fn new(config: ExtractionConfig) -> Result<Self> {
        let tagger: Box<dyn Tagger> = match &config.tagger_model {
            Some(path) => Box::new(PerceptronTagger::load(path)?),
            None => Box::new(LexiconTagger::new()),
        };
        let global = match &config.global_vectors {
            Some(path) => Some(GlobalSource::WordTable(load_vector_table(
                path,
                config.global_limit,
            )?)),
            None => None,
        };
        Ok(PipelineContext {
            config,
            tagger,
            global,
        })
    }

    /// Builds a context from already-constructed parts.
    pub fn with_parts(
        config: ExtractionConfig,
        tagger: Box<dyn Tagger>,
        global: Option<GlobalSource>,
    ) -> Self {
        PipelineContext {
            config,
            tagger,
            global,
        }
    }

    pub fn config(&self) -> &ExtractionConfig {
        &self.config
    }

    pub fn global_source(&self) -> Option<&GlobalSource> {
        self.global.as_ref()
    }

    fn candidate_mode(&self) -> CandidateMode {
        if self.config.all_subspans {
            CandidateMode::AllSubspans
        } else {
            CandidateMode::MaximalSpans
        }
    }

    /// Normalizes, tags, and extracts the filtered candidate set. Returns
    /// the token stream and the candidates; shared by the main pipeline
    /// and the baselines.
    pub fn prepare(&self, text: &str) -> (Vec<String>, Vec<Candidate>) {
        let normalized = preprocess(text);
        let tagged = tokenize_and_tag(&normalized, self.tagger.as_ref());
        let candidates = extract_candidates(&tagged, self.candidate_mode());
        let candidates = filter_outliers(candidates, self.config.alpha);
        let tokens = tagged.into_iter().map(|t| t.word).collect();
        (tokens, candidates)
    }

    /// Centrality options derived from the configuration.
    pub fn centrality_options(&self) -> CentralityOptions {
        CentralityOptions {
            damping: self.config.damping,
            weighted_pagerank: self.config.weighted_pagerank,
            weighted_degree: self.config.weighted_degree,
            distance: self.config.distance,
            subgraph_cap: self.config.subgraph_cap,
        }
    }

    /// Extracts keyphrases from one document.
    pub fn extract(&self, text: &str) -> Result<ExtractionOutcome> {
        let config = &self.config;
        let (tokens, candidates) = self.prepare(text);
        if tokens.is_empty() || candidates.is_empty() {
            log::warn!("document yields no candidates; returning an empty outcome");
            return Ok(ExtractionOutcome::empty(
                config.local_params.dimension,
                config.function_id,
                tokens,
            ));
        }

        let local = train_local(
            &tokens,
            config.local_algorithm,
            &config.local_params,
            config.seed,
        )?;

        let fallback;
        let global = match &self.global {
            Some(source) => source,
            None => {
                fallback = GlobalSource::WordTable(local.table().clone());
                &fallback
            }
        };

        let vectors: Vec<DualVectors> = candidates
            .iter()
            .map(|c| DualVectors {
                local: phrase_local_vector(&local, c),
                global: global.phrase_vector(c).0,
            })
            .collect();
        let doc_vectors = DualVectors {
            local: document_local_vector(&local, &tokens, config.local_doc_words),
            global: global.document_vector(&tokens, config.global_doc_words),
        };
        let oov = global.oov_report(&candidates);
        if oov.fraction() > 0.5 {
            log::warn!(
                "{:.0}% of candidate words are outside the global vocabulary",
                oov.fraction() * 100.0
            );
        }

        let graph = build_graph(candidates, &vectors, doc_vectors, config.function_id)?;
        let scores = compute_centrality(
            &graph,
            config.centrality,
            &self.centrality_options(),
            &vectors,
        )?;
        let keyphrases = rank_and_select(graph.candidates(), &scores, config.top_n);

        Ok(ExtractionOutcome {
            keyphrases,
            graph,
            scores,
            vectors,
            tokens,
            oov,
            training_losses: local.epoch_losses,
        })
    }
}
