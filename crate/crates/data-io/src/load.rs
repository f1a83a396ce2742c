use std::path::Path;

use mssc_kernel::Dataset;

use crate::IoError;

/// How matrix rows are tokenized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    /// Comma-separated values.
    Csv,
    /// Whitespace-separated columns.
    Whitespace,
}

impl std::str::FromStr for MatrixFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(MatrixFormat::Csv),
            "whitespace" => Ok(MatrixFormat::Whitespace),
            other => Err(format!(
                "unknown format '{other}' (expected csv or whitespace)"
            )),
        }
    }
}

/// Reads a numeric matrix file into a validated dataset.
///
/// Rows must be rectangular and every cell a finite number (scientific
/// notation accepted). Errors carry the 1-based line number of the offending
/// row. Blank lines are skipped; `skip_header` drops the first non-blank
/// line.
pub fn load_dataset(
    path: impl AsRef<Path>,
    format: MatrixFormat,
    skip_header: bool,
) -> Result<Dataset, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    load_dataset_from_str(&text, format, skip_header, &path.display().to_string())
}

/// As [`load_dataset`], over in-memory text; `name` labels error messages.
pub fn load_dataset_from_str(
    text: &str,
    format: MatrixFormat,
    skip_header: bool,
    name: &str,
) -> Result<Dataset, IoError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut expected_cols: Option<usize> = None;
    let mut header_pending = skip_header;

    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if header_pending {
            header_pending = false;
            continue;
        }
        let tokens: Vec<&str> = match format {
            MatrixFormat::Csv => trimmed.split(',').map(str::trim).collect(),
            MatrixFormat::Whitespace => trimmed.split_whitespace().collect(),
        };
        let mut row = Vec::with_capacity(tokens.len());
        for token in tokens {
            let value: f64 = token.parse().map_err(|_| IoError::ParseNumber {
                path: name.to_string(),
                line: line_no,
                token: token.to_string(),
            })?;
            if !value.is_finite() {
                return Err(IoError::NonFinite {
                    path: name.to_string(),
                    line: line_no,
                });
            }
            row.push(value);
        }
        if let Some(expected) = expected_cols {
            if row.len() != expected {
                return Err(IoError::RaggedRow {
                    path: name.to_string(),
                    line: line_no,
                    expected,
                    found: row.len(),
                });
            }
        } else {
            expected_cols = Some(row.len());
        }
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(IoError::EmptyFile {
            path: name.to_string(),
        });
    }
    Ok(Dataset::from_rows(rows)?)
}
