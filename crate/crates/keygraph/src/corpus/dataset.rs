//! Dataset layout: a directory of `<id>.txt` documents with side-by-side
//! `<id>.key` gold files, one gold phrase per line.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// One input document, identified by its file stem.
#[derive(Debug, Clone)]
pub struct RawDocument {
    pub id: String,
    pub text: String,
}

/// Gold keyphrases for one document: lowercased, trimmed, de-duplicated,
/// in file order.
#[derive(Debug, Clone, Default)]
pub struct GoldKeySet {
    pub phrases: Vec<String>,
}

/// A document paired with its gold keyphrases.
#[derive(Debug, Clone)]
pub struct DatasetEntry {
    pub document: RawDocument,
    pub gold: GoldKeySet,
}

/// Reads a file as text, replacing invalid byte sequences.
fn read_lossy(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

/// Loads a single document file; the id is the file stem.
pub fn read_document(path: &Path) -> Result<RawDocument> {
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(RawDocument {
        id,
        text: read_lossy(path)?,
    })
}

/// Loads a gold file: one phrase per line, lowercased and trimmed, blank
/// lines skipped, duplicates dropped.
pub fn load_gold_file(path: &Path) -> Result<GoldKeySet> {
    let text = read_lossy(path)?;
    let mut seen = HashSet::new();
    let mut phrases = Vec::new();
    for line in text.lines() {
        let phrase = line.trim().to_lowercase();
        if phrase.is_empty() {
            continue;
        }
        if seen.insert(phrase.clone()) {
            phrases.push(phrase);
        }
    }
    Ok(GoldKeySet { phrases })
}

/// Loads every `<id>.txt`/`<id>.key` pair under `dir`, sorted by id.
///
/// Documents without a gold file are skipped with a warning; unreadable
/// files are errors.
pub fn load_dataset(dir: &Path) -> Result<Vec<DatasetEntry>> {
    let mut doc_paths: Vec<PathBuf> = Vec::new();
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.extension().is_some_and(|ext| ext == "txt") {
            doc_paths.push(path);
        }
    }
    doc_paths.sort();

    let mut dataset = Vec::new();
    for doc_path in doc_paths {
        let key_path = doc_path.with_extension("key");
        if !key_path.exists() {
            log::warn!(
                "skipping {}: no gold file {}",
                doc_path.display(),
                key_path.display()
            );
            continue;
        }
        let document = read_document(&doc_path)?;
        let gold = load_gold_file(&key_path)?;
        dataset.push(DatasetEntry { document, gold });
    }
    Ok(dataset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_file(dir: &Path, name: &str, contents: &str) {
        let mut f = fs::File::create(dir.join(name)).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
    }

    #[test]
    fn loads_pairs_sorted_and_skips_missing_gold() {
        let dir = tempfile::tempdir().unwrap();
        write_file(dir.path(), "b.txt", "second document");
        write_file(dir.path(), "b.key", "graph model\n");
        write_file(dir.path(), "a.txt", "first document");
        write_file(dir.path(), "a.key", "Neural Network\nneural network\n\n topic model \n");
        write_file(dir.path(), "c.txt", "orphan without gold");
        write_file(dir.path(), "notes.md", "not part of the dataset");

        let dataset = load_dataset(dir.path()).unwrap();
        assert_eq!(dataset.len(), 2);
        assert_eq!(dataset[0].document.id, "a");
        assert_eq!(dataset[1].document.id, "b");
        assert_eq!(
            dataset[0].gold.phrases,
            vec!["neural network".to_owned(), "topic model".to_owned()]
        );
    }

    #[test]
    fn invalid_utf8_is_replaced_not_fatal() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("x.txt"), b"caf\xff latte").unwrap();
        let doc = read_document(&dir.path().join("x.txt")).unwrap();
        assert_eq!(doc.id, "x");
        assert!(doc.text.contains("latte"));
    }

    #[test]
    fn missing_directory_is_an_error() {
        assert!(load_dataset(Path::new("/nonexistent/dataset")).is_err());
    }
}
