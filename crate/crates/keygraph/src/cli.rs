//! Command-line front end: thin argument plumbing over the library.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use keygraph::config::{ExtractionConfig, MatchMode};
use keygraph::corpus::{load_dataset, read_document, write_phrase_report, ReportRow};
use keygraph::error::{Error, Result};
use keygraph::eval::{
    best_tfidf_baseline, evaluate_cooccurrence_baseline, evaluate_dataset, pr_curve,
    render_eval_report, render_sweep_table, sweep, write_pr_curve, EvalOptions, EvalReport,
};
use keygraph::pipeline::PipelineContext;

/// Name of the environment variable holding a default model directory; a
/// `tagger.json` inside it becomes the default tagger model.
pub const MODEL_DIR_ENV: &str = "KEYGRAPH_MODEL_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "keygraph",
    version,
    about = "Keyphrase extraction via embedding-similarity graphs"
)]
pub struct Cli {
    /// Size of the worker thread pool (default: one per core).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extract ranked keyphrases from one document.
    Extract(ExtractArgs),
    /// Score extraction over a dataset directory of .txt/.key pairs.
    Evaluate(EvaluateArgs),
    /// Evaluate one configuration per line of a sweep file.
    Sweep(SweepArgs),
    /// Build a document's graph and print its weighted edge list.
    DumpGraph(DumpGraphArgs),
}

/// Configuration layering: defaults, then `--config` records in file order,
/// then explicit flags.
#[derive(Args, Debug, Default)]
struct ConfigArgs {
    /// Configuration file; each non-comment line holds key=value overrides.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Candidate frequency-filter strength.
    #[arg(long)]
    alpha: Option<f64>,
    /// Edge-weighting function id.
    #[arg(long, value_name = "1..8")]
    function: Option<u8>,
    /// Centrality measure: degree, closeness, betweenness, harmonic,
    /// subgraph, eigenvector, pagerank, or personalized-pagerank.
    #[arg(long, value_name = "NAME")]
    centrality: Option<String>,
    /// Local embedding algorithm: skipgram or glove.
    #[arg(long = "local-model", value_name = "NAME")]
    local_model: Option<String>,
    /// Local embedding dimension.
    #[arg(long = "local-dim", value_name = "D")]
    local_dim: Option<usize>,
    /// Local context window size.
    #[arg(long = "local-window", value_name = "W")]
    local_window: Option<usize>,
    /// Local training epochs.
    #[arg(long = "local-epochs", value_name = "E")]
    local_epochs: Option<usize>,
    /// Leading words forming the local document vector.
    #[arg(long = "local-doc-words", value_name = "M")]
    local_doc_words: Option<usize>,
    /// Leading words forming the global document vector.
    #[arg(long = "n-repr", value_name = "N")]
    n_repr: Option<usize>,
    /// Pretrained word-vector file for the global space.
    #[arg(long = "global-vectors", value_name = "FILE")]
    global_vectors: Option<PathBuf>,
    /// Keep at most this many vector-file entries.
    #[arg(long = "global-limit", value_name = "K")]
    global_limit: Option<usize>,
    /// Trained tagger model file.
    #[arg(long = "tagger-model", value_name = "FILE")]
    tagger_model: Option<PathBuf>,
    /// Number of keyphrases to emit.
    #[arg(long = "top-n", value_name = "N")]
    top_n: Option<usize>,
    /// Damping factor for PageRank-style measures.
    #[arg(long)]
    damping: Option<f64>,
    /// Random seed for all stochastic stages.
    #[arg(long)]
    seed: Option<u64>,
    /// Similarity-to-distance conversion: inverse or one-minus.
    #[arg(long, value_name = "MODE")]
    distance: Option<String>,
    /// Ignore edge weights in PageRank transition probabilities.
    #[arg(long = "unweighted-pr")]
    unweighted_pr: bool,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<ExtractionConfig> {
        let mut config = ExtractionConfig::default();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            for (idx, line) in text.lines().enumerate() {
                config = config.apply_record(line, idx + 1)?;
            }
        }

        // Scalar flags reuse the key=value grammar; one parser, one set of
        // validation rules.
        let mut parts: Vec<String> = Vec::new();
        if let Some(v) = self.alpha {
            parts.push(format!("alpha={v}"));
        }
        if let Some(v) = self.function {
            parts.push(format!("function={v}"));
        }
        if let Some(v) = &self.centrality {
            parts.push(format!("centrality={v}"));
        }
        if let Some(v) = &self.local_model {
            parts.push(format!("local={v}"));
        }
        if let Some(v) = self.local_dim {
            parts.push(format!("dimension={v}"));
        }
        if let Some(v) = self.local_window {
            parts.push(format!("window={v}"));
        }
        if let Some(v) = self.local_epochs {
            parts.push(format!("epochs={v}"));
        }
        if let Some(v) = self.local_doc_words {
            parts.push(format!("local_doc_words={v}"));
        }
        if let Some(v) = self.n_repr {
            parts.push(format!("global_doc_words={v}"));
        }
        if let Some(v) = self.global_limit {
            parts.push(format!("global_limit={v}"));
        }
        if let Some(v) = self.top_n {
            parts.push(format!("top_n={v}"));
        }
        if let Some(v) = self.damping {
            parts.push(format!("damping={v}"));
        }
        if let Some(v) = self.seed {
            parts.push(format!("seed={v}"));
        }
        if let Some(v) = &self.distance {
            parts.push(format!("distance={v}"));
        }
        if self.unweighted_pr {
            parts.push("weighted_pagerank=false".to_owned());
        }
        if !parts.is_empty() {
            config = config.apply_record(&parts.join(" "), 0).map_err(|e| match e {
                Error::ConfigParse { message, .. } => Error::InvalidInput(message),
                other => other,
            })?;
        }

        // Paths bypass the record grammar so they may contain spaces.
        if let Some(path) = &self.global_vectors {
            config.global_vectors = Some(path.clone());
        }
        if let Some(path) = &self.tagger_model {
            config.tagger_model = Some(path.clone());
        } else if config.tagger_model.is_none() {
            if let Some(dir) = std::env::var_os(MODEL_DIR_ENV) {
                let default = Path::new(&dir).join("tagger.json");
                if default.is_file() {
                    config.tagger_model = Some(default);
                }
            }
        }
        Ok(config)
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write here instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_name = "text|tsv", default_value = "text")]
    format: String,
}

impl OutputArgs {
    fn tsv(&self) -> Result<bool> {
        match self.format.as_str() {
            "text" => Ok(false),
            "tsv" => Ok(true),
            other => Err(Error::InvalidInput(format!(
                "unknown format '{other}' (expected text or tsv)"
            ))),
        }
    }

    fn emit(&self, content: &str) -> Result<()> {
        match &self.output {
            Some(path) => fs::write(path, content).map_err(|e| Error::io(path, e)),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

#[derive(Args, Debug)]
struct MatchArgs {
    /// Phrase matching: exact or stemmed.
    #[arg(long = "match", value_name = "MODE", default_value = "stemmed")]
    match_mode: String,
    /// Drop gold phrases that never occur in the document.
    #[arg(long = "drop-absent-gold")]
    drop_absent_gold: bool,
}

impl MatchArgs {
    fn options(&self) -> Result<EvalOptions> {
        Ok(EvalOptions {
            match_mode: self.match_mode.parse::<MatchMode>()?,
            drop_absent_gold: self.drop_absent_gold,
        })
    }
}

#[derive(Args, Debug)]
struct ExtractArgs {
    /// Document file to extract from.
    document: PathBuf,
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    /// Dataset directory of side-by-side <id>.txt and <id>.key files.
    #[arg(long, value_name = "DIR")]
    dataset: PathBuf,
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    matching: MatchArgs,
    /// Also score the tf-idf and co-occurrence baselines.
    #[arg(long)]
    baselines: bool,
    /// Sliding-window size for the co-occurrence baseline.
    #[arg(long = "cooc-window", value_name = "K", default_value_t = 10)]
    cooc_window: usize,
    /// Write a precision/recall curve over top-N cutoffs to this file.
    #[arg(long = "pr-curve", value_name = "FILE")]
    pr_curve: Option<PathBuf>,
    /// Largest cutoff on the precision/recall curve.
    #[arg(long = "pr-max-n", value_name = "N", default_value_t = 30)]
    pr_max_n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Dataset directory of side-by-side <id>.txt and <id>.key files.
    #[arg(long, value_name = "DIR")]
    dataset: PathBuf,
    /// Sweep file: one configuration record per line, applied over the
    /// base configuration from the other flags.
    #[arg(long, value_name = "FILE")]
    configs: PathBuf,
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    matching: MatchArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct DumpGraphArgs {
    /// Document file to build the graph from.
    document: PathBuf,
    #[command(flatten)]
    config: ConfigArgs,
    /// Write here instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

pub fn run() -> Result<()> {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Extract(args) => run_extract(args),
        Command::Evaluate(args) => run_evaluate(args),
        Command::Sweep(args) => run_sweep(args),
        Command::DumpGraph(args) => run_dump_graph(args),
    }
}

fn run_extract(args: ExtractArgs) -> Result<()> {
    let tsv = args.out.tsv()?;
    let ctx = PipelineContext::new(args.config.resolve()?)?;
    let document = read_document(&args.document)?;
    let outcome = ctx.extract(&document.text)?;

    let rows: Vec<ReportRow> = outcome
        .keyphrases
        .iter()
        .map(|s| ReportRow {
            rank: s.rank,
            phrase: s.candidate.phrase(),
            score: s.score,
        })
        .collect();
    let content = if tsv {
        let mut buf = Vec::new();
        write_phrase_report(&mut buf, &rows).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("report rows are valid UTF-8")
    } else {
        let mut text = String::new();
        for row in &rows {
            text.push_str(&format!("{:>4}  {}  {:.6}\n", row.rank, row.phrase, row.score));
        }
        text
    };
    args.out.emit(&content)
}

fn summary_line(report: &EvalReport) -> String {
    format!(
        "{:<18} docs={} tp={} fp={} fn={} precision={:.4} recall={:.4} f1={:.4}\n",
        report.label,
        report.per_doc.len(),
        report.totals.true_positives,
        report.totals.false_positives,
        report.totals.false_negatives,
        report.metrics.precision,
        report.metrics.recall,
        report.metrics.f1,
    )
}

fn run_evaluate(args: EvaluateArgs) -> Result<()> {
    let tsv = args.out.tsv()?;
    let options = args.matching.options()?;
    let config = args.config.resolve()?;
    let ctx = PipelineContext::new(config)?;
    let dataset = load_dataset(&args.dataset)?;

    let mut reports = vec![evaluate_dataset(&ctx, &dataset, &options)?];
    if args.baselines {
        let (_, tfidf) = best_tfidf_baseline(&ctx, &dataset, &options)?;
        reports.push(tfidf);
        reports.push(evaluate_cooccurrence_baseline(
            &ctx,
            &dataset,
            &options,
            args.cooc_window,
        )?);
    }

    if let Some(path) = &args.pr_curve {
        let cutoffs: Vec<usize> = (1..=args.pr_max_n.max(1)).collect();
        let curve = pr_curve(&ctx, &dataset, &options, &cutoffs)?;
        write_pr_curve(path, &curve)?;
    }

    let content = if tsv {
        reports.iter().map(render_eval_report).collect::<Vec<_>>().join("\n")
    } else {
        let mut text = format!("config: {}\n", reports[0].config_record);
        for report in &reports {
            text.push_str(&summary_line(report));
        }
        text
    };
    args.out.emit(&content)
}

fn run_sweep(args: SweepArgs) -> Result<()> {
    let tsv = args.out.tsv()?;
    let options = args.matching.options()?;
    let base = args.config.resolve()?;
    let text = fs::read_to_string(&args.configs).map_err(|e| Error::io(&args.configs, e))?;
    let configs = keygraph::config::parse_sweep_records(&text, &base)?;
    let dataset = load_dataset(&args.dataset)?;

    let rows = sweep(&configs, &dataset, &options);
    let content = if tsv {
        render_sweep_table(&rows)
    } else {
        let mut text = String::new();
        for row in &rows {
            match &row.result {
                Ok(m) => text.push_str(&format!(
                    "precision={:.4} recall={:.4} f1={:.4}  {}\n",
                    m.precision, m.recall, m.f1, row.record
                )),
                Err(msg) => text.push_str(&format!("failed: {msg}  {}\n", row.record)),
            }
        }
        text
    };
    args.out.emit(&content)
}

fn run_dump_graph(args: DumpGraphArgs) -> Result<()> {
    let ctx = PipelineContext::new(args.config.resolve()?)?;
    let document = read_document(&args.document)?;
    let outcome = ctx.extract(&document.text)?;

    let mut buf = Vec::new();
    outcome
        .graph
        .write_edge_list(&mut buf)
        .expect("writing to a Vec cannot fail");
    let content = String::from_utf8(buf).expect("edge list is valid UTF-8");
    match &args.output {
        Some(path) => fs::write(path, content).map_err(|e| Error::io(path, e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
