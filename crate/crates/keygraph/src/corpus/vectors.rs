//! Whitespace-separated word-vector files, as written by common embedding
//! tools: an optional `vocab dimension` header line, then one word followed
//! by its components per line.

use std::collections::HashMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::vector::DenseVector;

/// In-memory word-vector lookup table. Insertion order is preserved so that
/// loading the same file twice yields identical tables.
#[derive(Debug, Clone, Default)]
pub struct VectorTable {
    dimension: usize,
    words: Vec<String>,
    index: HashMap<String, usize>,
    vectors: Vec<DenseVector>,
}

impl VectorTable {
    pub fn new(dimension: usize) -> Self {
        VectorTable {
            dimension,
            words: Vec::new(),
            index: HashMap::new(),
            vectors: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn get(&self, word: &str) -> Option<&DenseVector> {
        self.index.get(word).map(|&i| &self.vectors[i])
    }

    /// Words in insertion order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    /// (word, vector) pairs in insertion order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &DenseVector)> {
        self.words
            .iter()
            .map(String::as_str)
            .zip(self.vectors.iter())
    }

    /// Inserts a word; duplicates keep the first vector seen.
    pub fn insert(&mut self, word: &str, vector: DenseVector) -> Result<()> {
        if vector.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                left: self.dimension,
                right: vector.dimension(),
            });
        }
        if self.index.contains_key(word) {
            return Ok(());
        }
        self.index.insert(word.to_owned(), self.words.len());
        self.words.push(word.to_owned());
        self.vectors.push(vector);
        Ok(())
    }
}

/// True when the line looks like a `vocab dimension` header: exactly two
/// tokens, both non-negative integers.
fn is_header(line: &str) -> bool {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
}

/// Loads a word-vector file.
///
/// The first line may be a `vocab dimension` header; it is detected and
/// skipped. Every other non-empty line is `word c1 c2 ... cd` with
/// whitespace separation; scientific notation is accepted. Duplicate words
/// keep the first entry. With `limit`, at most that many entries are kept,
/// in file order.
pub fn load_vector_table(path: &Path, limit: Option<usize>) -> Result<VectorTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut table: Option<VectorTable> = None;
    let mut first_data_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !first_data_seen && idx == 0 && is_header(line) {
            continue;
        }
        first_data_seen = true;

        if let Some(limit) = limit {
            if table.as_ref().is_some_and(|t| t.len() >= limit) {
                break;
            }
        }

        let mut tokens = line.split_whitespace();
        let word = tokens.next().expect("non-empty line has a first token");
        let mut components = Vec::new();
        for token in tokens {
            let value: f64 = token.parse().map_err(|_| Error::VectorParse {
                path: path.to_owned(),
                line: line_no,
                message: format!("'{token}' is not a number"),
            })?;
            components.push(value);
        }
        if components.is_empty() {
            return Err(Error::VectorParse {
                path: path.to_owned(),
                line: line_no,
                message: format!("word '{word}' has no components"),
            });
        }

        let table = table.get_or_insert_with(|| VectorTable::new(components.len()));
        if components.len() != table.dimension() {
            return Err(Error::VectorParse {
                path: path.to_owned(),
                line: line_no,
                message: format!(
                    "expected {} components, found {}",
                    table.dimension(),
                    components.len()
                ),
            });
        }
        table.insert(word, DenseVector::new(components))?;
    }

    table.ok_or_else(|| Error::VectorParse {
        path: path.to_owned(),
        line: 0,
        message: "file contains no vector entries".to_owned(),
    })
}

/// Writes a table in the same text format, optionally with a
/// `vocab dimension` header. Components use `precision` decimal digits.
pub fn write_vector_table(
    path: &Path,
    table: &VectorTable,
    with_header: bool,
    precision: usize,
) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    let write = |e: std::io::Error| Error::io(path, e);

    if with_header {
        writeln!(out, "{} {}", table.len(), table.dimension()).map_err(write)?;
    }
    for (word, vector) in table.entries() {
        out.write_all(word.as_bytes()).map_err(write)?;
        for c in vector.as_slice() {
            write!(out, " {c:.precision$}").map_err(write)?;
        }
        out.write_all(b"\n").map_err(write)?;
    }
    out.flush().map_err(write)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(contents: &str) -> tempfile::NamedTempFile {
        let file = tempfile::NamedTempFile::new().unwrap();
        fs::write(file.path(), contents).unwrap();
        file
    }

    #[test]
    fn loads_file_with_header() {
        let file = write_temp("2 3\nking 0.1 0.2 0.3\nqueen 1e-1 -2.5E-2 4.0\n");
        let table = load_vector_table(file.path(), None).unwrap();
        assert_eq!(table.dimension(), 3);
        assert_eq!(table.len(), 2);
        assert_eq!(table.get("queen").unwrap().as_slice(), &[0.1, -0.025, 4.0]);
    }

    #[test]
    fn loads_file_without_header() {
        let file = write_temp("king 0.1 0.2\nqueen 0.3 0.4\n");
        let table = load_vector_table(file.path(), None).unwrap();
        assert_eq!(table.dimension(), 2);
        assert_eq!(table.len(), 2);
    }

    #[test]
    fn duplicates_keep_first_entry() {
        let file = write_temp("king 1.0 2.0\nking 9.0 9.0\n");
        let table = load_vector_table(file.path(), None).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.get("king").unwrap().as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn limit_keeps_file_order() {
        let file = write_temp("a 1.0\nb 2.0\nc 3.0\n");
        let table = load_vector_table(file.path(), Some(2)).unwrap();
        assert_eq!(table.words().collect::<Vec<_>>(), vec!["a", "b"]);
    }

    #[test]
    fn dimension_mismatch_reports_line() {
        let file = write_temp("a 1.0 2.0\nb 3.0\n");
        let err = load_vector_table(file.path(), None).unwrap_err();
        assert!(err.to_string().contains(":2:"), "{err}");
    }

    #[test]
    fn non_numeric_component_reports_line() {
        let file = write_temp("a 1.0\nb x\n");
        let err = load_vector_table(file.path(), None).unwrap_err();
        assert!(err.to_string().contains(":2:"), "{err}");
    }

    #[test]
    fn empty_file_is_an_error() {
        let file = write_temp("");
        assert!(load_vector_table(file.path(), None).is_err());
    }

    #[test]
    fn write_then_load_round_trips() {
        let mut table = VectorTable::new(2);
        table.insert("alpha", DenseVector::new(vec![0.5, -1.25])).unwrap();
        table.insert("beta", DenseVector::new(vec![3.0, 0.0])).unwrap();

        let file = tempfile::NamedTempFile::new().unwrap();
        write_vector_table(file.path(), &table, true, 6).unwrap();
        let loaded = load_vector_table(file.path(), None).unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(loaded.get("alpha").unwrap().as_slice(), &[0.5, -1.25]);
        assert_eq!(
            loaded.words().collect::<Vec<_>>(),
            table.words().collect::<Vec<_>>()
        );
    }
}
