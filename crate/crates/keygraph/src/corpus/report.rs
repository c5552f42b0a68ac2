//! Tab-separated phrase reports: a header line, then `rank<TAB>phrase<TAB>score`
//! rows with scores at six decimal places.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// One ranked phrase in a report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub rank: usize,
    pub phrase: String,
    pub score: f64,
}

const HEADER: &str = "rank\tphrase\tscore";

/// Writes rows in report format to any writer.
pub fn write_phrase_report<W: Write>(out: &mut W, rows: &[ReportRow]) -> std::io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for row in rows {
        writeln!(out, "{}\t{}\t{:.6}", row.rank, row.phrase, row.score)?;
    }
    Ok(())
}

/// Writes rows in report format to a file.
pub fn write_phrase_report_file(path: &Path, rows: &[ReportRow]) -> Result<()> {
    let mut out = Vec::new();
    write_phrase_report(&mut out, rows).expect("writing to a Vec cannot fail");
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Reads a report back; the inverse of [`write_phrase_report`] up to score
/// rounding.
pub fn read_phrase_report(path: &Path) -> Result<Vec<ReportRow>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if idx == 0 {
            if line != HEADER {
                return Err(Error::ReportParse {
                    path: path.to_owned(),
                    line: line_no,
                    message: format!("expected header '{HEADER}'"),
                });
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.splitn(3, '\t');
        let parse_err = |message: String| Error::ReportParse {
            path: path.to_owned(),
            line: line_no,
            message,
        };
        let rank = fields
            .next()
            .and_then(|f| f.parse::<usize>().ok())
            .ok_or_else(|| parse_err("missing or non-numeric rank".to_owned()))?;
        let phrase = fields
            .next()
            .ok_or_else(|| parse_err("missing phrase".to_owned()))?
            .to_owned();
        let score = fields
            .next()
            .and_then(|f| f.parse::<f64>().ok())
            .ok_or_else(|| parse_err("missing or non-numeric score".to_owned()))?;
        rows.push(ReportRow { rank, phrase, score });
    }
    Ok(rows)
}
