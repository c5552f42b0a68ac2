//! Pipeline configuration and its plain-text record form.
//!
//! A configuration can be rendered as a single `key=value` record line and
//! parsed back. Sweep files hold one such record per line, each interpreted
//! as a set of overrides on top of the defaults.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Centrality measure used to rank graph nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralityKind {
    Degree,
    Eigenvector,
    PageRank,
    PersonalizedPageRank,
    Subgraph,
    Harmonic,
    Betweenness,
    Closeness,
}

impl CentralityKind {
    /// All supported measures, in a fixed order convenient for sweeps.
    pub const ALL: [CentralityKind; 8] = [
        CentralityKind::Degree,
        CentralityKind::Eigenvector,
        CentralityKind::PageRank,
        CentralityKind::PersonalizedPageRank,
        CentralityKind::Subgraph,
        CentralityKind::Harmonic,
        CentralityKind::Betweenness,
        CentralityKind::Closeness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentralityKind::Degree => "degree",
            CentralityKind::Eigenvector => "eigenvector",
            CentralityKind::PageRank => "pagerank",
            CentralityKind::PersonalizedPageRank => "personalized-pagerank",
            CentralityKind::Subgraph => "subgraph",
            CentralityKind::Harmonic => "harmonic",
            CentralityKind::Betweenness => "betweenness",
            CentralityKind::Closeness => "closeness",
        }
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CentralityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(CentralityKind::Degree),
            "eigenvector" => Ok(CentralityKind::Eigenvector),
            "pagerank" => Ok(CentralityKind::PageRank),
            "personalized-pagerank" | "ppr" => Ok(CentralityKind::PersonalizedPageRank),
            "subgraph" => Ok(CentralityKind::Subgraph),
            "harmonic" => Ok(CentralityKind::Harmonic),
            "betweenness" => Ok(CentralityKind::Betweenness),
            "closeness" => Ok(CentralityKind::Closeness),
            other => Err(Error::InvalidInput(format!(
                "unknown centrality '{other}' (expected one of degree, eigenvector, pagerank, \
                 personalized-pagerank, subgraph, harmonic, betweenness, closeness)"
            ))),
        }
    }
}

/// Algorithm used to train the per-document embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalAlgorithm {
    SkipGram,
    Glove,
}

impl LocalAlgorithm {
    pub const ALL: [LocalAlgorithm; 2] = [LocalAlgorithm::SkipGram, LocalAlgorithm::Glove];

    pub fn name(self) -> &'static str {
        match self {
            LocalAlgorithm::SkipGram => "skipgram",
            LocalAlgorithm::Glove => "glove",
        }
    }
}

impl fmt::Display for LocalAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LocalAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skipgram" => Ok(LocalAlgorithm::SkipGram),
            "glove" => Ok(LocalAlgorithm::Glove),
            other => Err(Error::InvalidInput(format!(
                "unknown local algorithm '{other}' (expected skipgram or glove)"
            ))),
        }
    }
}

/// How an edge weight is turned into a traversal cost for shortest-path
/// centralities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceMode {
    /// cost = 1 / weight; strong edges are short.
    Inverse,
    /// cost = max(1 - weight, floor); only meaningful for weights in [0, 1].
    OneMinus,
}

impl DistanceMode {
    pub fn name(self) -> &'static str {
        match self {
            DistanceMode::Inverse => "inverse",
            DistanceMode::OneMinus => "one-minus",
        }
    }
}

impl fmt::Display for DistanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DistanceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse" => Ok(DistanceMode::Inverse),
            "one-minus" => Ok(DistanceMode::OneMinus),
            other => Err(Error::InvalidInput(format!(
                "unknown distance mode '{other}' (expected inverse or one-minus)"
            ))),
        }
    }
}

/// How predicted phrases are compared against gold phrases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchMode {
    Exact,
    Stemmed,
}

impl MatchMode {
    pub fn name(self) -> &'static str {
        match self {
            MatchMode::Exact => "exact",
            MatchMode::Stemmed => "stemmed",
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(MatchMode::Exact),
            "stemmed" => Ok(MatchMode::Stemmed),
            other => Err(Error::InvalidInput(format!(
                "unknown match mode '{other}' (expected exact or stemmed)"
            ))),
        }
    }
}

/// Aggregation used by the tf-idf baseline to score a multi-word phrase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TfidfMode {
    Sum,
    Mean,
}

impl TfidfMode {
    pub fn name(self) -> &'static str {
        match self {
            TfidfMode::Sum => "sum",
            TfidfMode::Mean => "mean",
        }
    }
}

impl fmt::Display for TfidfMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TfidfMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(TfidfMode::Sum),
            "mean" => Ok(TfidfMode::Mean),
            other => Err(Error::InvalidInput(format!(
                "unknown tf-idf mode '{other}' (expected sum or mean)"
            ))),
        }
    }
}

/// Hyperparameters for per-document embedding training.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingParams {
    pub dimension: usize,
    pub window: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    /// Negative samples per positive pair (skip-gram only).
    pub negative_samples: usize,
}

impl Default for TrainingParams {
    fn default() -> Self {
        TrainingParams {
            dimension: 100,
            window: 5,
            epochs: 200,
            learning_rate: 0.025,
            negative_samples: 5,
        }
    }
}

/// Full configuration for one extraction run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionConfig {
    /// Frequency-filter strength: a candidate of n words survives only if its
    /// count is at least alpha / ((n - 1)^2 + 1).
    pub alpha: f64,
    /// Leading words summed into the document's local-space vector.
    pub local_doc_words: usize,
    /// Leading words summed into the document's global-space vector.
    pub global_doc_words: usize,
    /// Edge-weighting function id, 1..=8.
    pub function_id: u8,
    pub centrality: CentralityKind,
    pub local_algorithm: LocalAlgorithm,
    pub local_params: TrainingParams,
    /// Pretrained word-vector file; without it, global vectors fall back to
    /// the local model.
    pub global_vectors: Option<PathBuf>,
    /// Keep at most this many entries from the vector file.
    pub global_limit: Option<usize>,
    /// Trained tagger model; without it, the rule-based tagger is used.
    pub tagger_model: Option<PathBuf>,
    /// Number of keyphrases to emit.
    pub top_n: usize,
    /// Damping factor for PageRank-style measures.
    pub damping: f64,
    pub seed: u64,
    /// Use edge weights in PageRank transition probabilities.
    pub weighted_pagerank: bool,
    /// Use strength (sum of incident weights) instead of edge count for
    /// degree centrality.
    pub weighted_degree: bool,
    pub distance: DistanceMode,
    /// Emit every sub-span of a pattern match as its own candidate instead of
    /// maximal spans only.
    pub all_subspans: bool,
    /// Node cap for the dense eigendecomposition behind subgraph centrality.
    pub subgraph_cap: usize,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            alpha: 7.0,
            local_doc_words: 10,
            global_doc_words: 250,
            function_id: 6,
            centrality: CentralityKind::Eigenvector,
            local_algorithm: LocalAlgorithm::Glove,
            local_params: TrainingParams::default(),
            global_vectors: None,
            global_limit: None,
            tagger_model: None,
            top_n: 15,
            damping: 0.85,
            seed: 42,
            weighted_pagerank: true,
            weighted_degree: false,
            distance: DistanceMode::Inverse,
            all_subspans: false,
            subgraph_cap: 5000,
        }
    }
}

impl ExtractionConfig {
    /// Renders the configuration as one `key=value` record line.
    ///
    /// Path values are rendered verbatim, so paths containing whitespace
    /// cannot round-trip through the record form.
    pub fn to_record(&self) -> String {
        let mut parts: Vec<String> = vec![
            format!("alpha={}", self.alpha),
            format!("local_doc_words={}", self.local_doc_words),
            format!("global_doc_words={}", self.global_doc_words),
            format!("function={}", self.function_id),
            format!("centrality={}", self.centrality),
            format!("local={}", self.local_algorithm),
            format!("dimension={}", self.local_params.dimension),
            format!("window={}", self.local_params.window),
            format!("epochs={}", self.local_params.epochs),
            format!("learning_rate={}", self.local_params.learning_rate),
            format!("negative_samples={}", self.local_params.negative_samples),
            format!("top_n={}", self.top_n),
            format!("damping={}", self.damping),
            format!("seed={}", self.seed),
            format!("weighted_pagerank={}", self.weighted_pagerank),
            format!("weighted_degree={}", self.weighted_degree),
            format!("distance={}", self.distance),
            format!("all_subspans={}", self.all_subspans),
            format!("subgraph_cap={}", self.subgraph_cap),
        ];
        if let Some(path) = &self.global_vectors {
            parts.push(format!("vectors={}", path.display()));
        }
        if let Some(limit) = self.global_limit {
            parts.push(format!("global_limit={limit}"));
        }
        if let Some(path) = &self.tagger_model {
            parts.push(format!("tagger={}", path.display()));
        }
        parts.join(" ")
    }

    /// Applies the `key=value` pairs in `record` on top of `self`.
    ///
    /// `line` is the 1-based line number used in error messages. Empty
    /// records and records starting with `#` leave the config unchanged.
    pub fn apply_record(&self, record: &str, line: usize) -> Result<ExtractionConfig> {
        let mut config = self.clone();
        let record = record.trim();
        if record.is_empty() || record.starts_with('#') {
            return Ok(config);
        }
        for token in record.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| Error::ConfigParse {
                line,
                message: format!("expected key=value, got '{token}'"),
            })?;
            config.apply_pair(key, value, line)?;
        }
        config.validate(line)?;
        Ok(config)
    }

    fn apply_pair(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        fn parse<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T>
        where
            T::Err: fmt::Display,
        {
            value.parse().map_err(|e| Error::ConfigParse {
                line,
                message: format!("bad value '{value}' for {key}: {e}"),
            })
        }

        match key {
            "alpha" => self.alpha = parse(key, value, line)?,
            "local_doc_words" => self.local_doc_words = parse(key, value, line)?,
            "global_doc_words" => self.global_doc_words = parse(key, value, line)?,
            "function" => self.function_id = parse(key, value, line)?,
            "centrality" => self.centrality = parse(key, value, line)?,
            "local" => self.local_algorithm = parse(key, value, line)?,
            "dimension" => self.local_params.dimension = parse(key, value, line)?,
            "window" => self.local_params.window = parse(key, value, line)?,
            "epochs" => self.local_params.epochs = parse(key, value, line)?,
            "learning_rate" => self.local_params.learning_rate = parse(key, value, line)?,
            "negative_samples" => self.local_params.negative_samples = parse(key, value, line)?,
            "top_n" => self.top_n = parse(key, value, line)?,
            "damping" => self.damping = parse(key, value, line)?,
            "seed" => self.seed = parse(key, value, line)?,
            "weighted_pagerank" => self.weighted_pagerank = parse(key, value, line)?,
            "weighted_degree" => self.weighted_degree = parse(key, value, line)?,
            "distance" => self.distance = parse(key, value, line)?,
            "all_subspans" => self.all_subspans = parse(key, value, line)?,
            "subgraph_cap" => self.subgraph_cap = parse(key, value, line)?,
            "vectors" => self.global_vectors = Some(PathBuf::from(value)),
            "global_limit" => self.global_limit = Some(parse(key, value, line)?),
            "tagger" => self.tagger_model = Some(PathBuf::from(value)),
            other => {
                return Err(Error::ConfigParse {
                    line,
                    message: format!("unknown key '{other}'"),
                })
            }
        }
        Ok(())
    }

    fn validate(&self, line: usize) -> Result<()> {
        if !(1..=8).contains(&self.function_id) {
            return Err(Error::ConfigParse {
                line,
                message: format!("function id {} out of range 1..=8", self.function_id),
            });
        }
        if !(0.0..1.0).contains(&self.damping) && self.damping != 1.0 {
            return Err(Error::ConfigParse {
                line,
                message: format!("damping {} outside [0, 1]", self.damping),
            });
        }
        if self.local_params.dimension == 0 {
            return Err(Error::ConfigParse {
                line,
                message: "dimension must be positive".to_owned(),
            });
        }
        Ok(())
    }
}

/// Parses a sweep file: one record per line, each a set of overrides applied
/// on top of `base`. Blank lines and `#` comments are skipped.
pub fn parse_sweep_records(text: &str, base: &ExtractionConfig) -> Result<Vec<ExtractionConfig>> {
    let mut configs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        configs.push(base.apply_record(trimmed, idx + 1)?);
    }
    Ok(configs)
}
