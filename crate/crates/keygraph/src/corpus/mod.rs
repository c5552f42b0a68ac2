//! Corpus input and output: datasets, pretrained vector tables, and
//! phrase reports.

mod dataset;
mod report;
mod vectors;

pub use dataset::{load_dataset, load_gold_file, read_document, DatasetEntry, GoldKeySet, RawDocument};
pub use report::{read_phrase_report, write_phrase_report, write_phrase_report_file, ReportRow};
pub use vectors::{load_vector_table, write_vector_table, VectorTable};
