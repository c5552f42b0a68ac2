//! End-to-end checks of the command-line binary.
//!
//! Each test spawns the compiled binary against the bundled fixture corpus
//! and asserts on exit status and output shape, not on tuned score values.

use std::path::Path;
use std::process::{Command, Output};

const DOC: &str = "assets/fixtures/abstracts/01.txt";
const DATASET: &str = "assets/fixtures/abstracts";
const VECTORS: &str = "assets/fixtures/vectors.txt";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_keygraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

/// Parses one text-format result row: rank, phrase words, score.
fn parse_row(line: &str) -> (usize, String, f64) {
    let fields: Vec<&str> = line.split_whitespace().collect();
    assert!(fields.len() >= 3, "short row: {line:?}");
    let rank = fields[0].parse().expect("leading rank");
    let score = fields[fields.len() - 1].parse().expect("trailing score");
    (rank, fields[1..fields.len() - 1].join(" "), score)
}

#[test]
fn extract_prints_ranked_phrases() {
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS, "--local-epochs", "3",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<(usize, String, f64)> = text.lines().map(parse_row).collect();
    assert_eq!(rows.len(), 15, "default top_n emits 15 rows");
    for (idx, (rank, phrase, score)) in rows.iter().enumerate() {
        assert_eq!(*rank, idx + 1, "ranks count up from one");
        assert!(!phrase.is_empty());
        assert!(score.is_finite());
    }
    // Scores are emitted best first.
    for pair in rows.windows(2) {
        assert!(pair[0].2 >= pair[1].2, "scores must not increase");
    }
}

#[test]
fn extract_tsv_has_header_and_rows() {
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS, "--local-epochs", "3",
        "--format", "tsv",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rank\tphrase\tscore"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 15);
    for row in rows {
        let fields: Vec<&str> = row.split('\t').collect();
        assert_eq!(fields.len(), 3, "three tab-separated fields: {row:?}");
        fields[0].parse::<usize>().expect("rank column");
        fields[2].parse::<f64>().expect("score column");
    }
}

#[test]
fn extract_top_n_zero_emits_nothing() {
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS, "--local-epochs", "3",
        "--top-n", "0",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty(), "no rows requested, no rows printed");
}

#[test]
fn extract_writes_output_file() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("phrases.txt");
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS, "--local-epochs", "3",
        "--output", path.to_str().expect("UTF-8 path"),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty(), "rows go to the file, not stdout");
    let written = std::fs::read_to_string(&path).expect("output file");
    assert_eq!(written.lines().count(), 15);
}

#[test]
fn extract_is_deterministic_under_fixed_seed() {
    let args = ["extract", DOC, "--global-vectors", VECTORS, "--seed", "42"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "stderr: {}", stderr(&first));
    assert!(second.status.success(), "stderr: {}", stderr(&second));
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");
}

#[test]
fn extract_missing_document_fails_cleanly() {
    let out = run(&["extract", "no/such/document.txt", "--global-vectors", VECTORS]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("error"),
        "stderr should explain: {}",
        stderr(&out)
    );
}

#[test]
fn extract_rejects_function_id_out_of_range() {
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS, "--function", "9",
    ]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("function id 9"),
        "stderr should name the bad id: {}",
        stderr(&out)
    );
}

#[test]
fn config_file_overrides_apply() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# trimmed run\ntop_n=5 function=2\nepochs=3\n")
        .expect("config file");
    let out = run(&[
        "extract", DOC, "--global-vectors", VECTORS,
        "--config", path.to_str().expect("UTF-8 path"),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).lines().count(), 5, "top_n=5 from the file");
}

#[test]
fn evaluate_reports_micro_scores() {
    let out = run(&[
        "evaluate", "--dataset", DATASET, "--global-vectors", VECTORS,
        "--local-epochs", "3",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("docs=5"), "all five fixture documents scored");
    assert!(text.contains("precision=") && text.contains("recall=") && text.contains("f1="));
}

#[test]
fn evaluate_baselines_are_listed() {
    let out = run(&[
        "evaluate", "--dataset", DATASET, "--global-vectors", VECTORS,
        "--local-epochs", "3", "--baselines",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("tfidf"), "tf-idf baseline row present");
    assert!(text.contains("cooccurrence-w10"), "co-occurrence baseline row present");
}

#[test]
fn sweep_scores_each_record() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("grid.conf");
    std::fs::write(&path, "function=2\n# comment line\ncentrality=degree top_n=10\n")
        .expect("sweep file");
    let out = run(&[
        "sweep", "--dataset", DATASET, "--configs",
        path.to_str().expect("UTF-8 path"),
        "--global-vectors", VECTORS, "--local-epochs", "3",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "one result line per sweep record");
    assert!(lines.iter().all(|l| l.contains("f1=")));
    assert!(lines[0].contains("function=2"));
    assert!(lines[1].contains("centrality=degree"));
}

#[test]
fn dump_graph_emits_ordered_edge_list() {
    let out = run(&[
        "dump-graph", DOC, "--global-vectors", VECTORS, "--local-epochs", "3",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(!text.is_empty(), "fixture document yields a connected graph");
    for line in text.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 3, "edge rows are u, v, weight: {line:?}");
        let u: usize = fields[0].parse().expect("source id");
        let v: usize = fields[1].parse().expect("target id");
        let w: f64 = fields[2].parse().expect("weight");
        assert!(u < v, "each undirected edge appears once, low id first");
        assert!(w > 0.0, "only positive-similarity edges survive");
    }
}

#[test]
fn vectors_are_required_reading() {
    // A nonexistent vector file must fail loudly, not silently zero out the
    // global space.
    let out = run(&["extract", DOC, "--global-vectors", "no/such/vectors.txt"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("error"), "stderr: {}", stderr(&out));
}

#[test]
fn help_covers_every_subcommand() {
    for sub in ["extract", "evaluate", "sweep", "dump-graph"] {
        let out = run(&[sub, "--help"]);
        assert!(out.status.success(), "{sub} --help should exit zero");
        assert!(
            stdout(&out).contains("Usage:"),
            "{sub} --help prints usage"
        );
    }
    assert!(Path::new(DOC).exists(), "fixture corpus ships with the crate");
}
