use std::path::Path;

use serde::{Deserialize, Serialize};
use vls_core::IterationRecord;

use crate::IoError;

/// Version written into every result document; readers reject anything else.
pub const SCHEMA_VERSION: u32 = 1;

/// Flat echo of the configuration a run was launched with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub algorithm: String,
    pub clusters: usize,
    pub sample_size: Option<usize>,
    pub sample_min: Option<usize>,
    pub sample_max: Option<usize>,
    pub iterations: u64,
    pub seed: u64,
    pub workers: u32,
    pub shake_min: Option<u32>,
    pub shake_max: Option<u32>,
    pub reevaluate_on_new_sample: bool,
}

/// One history row; column names match the CSV export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryRow {
    pub t: u64,
    pub phase: u8,
    pub k: u32,
    pub sample_size: usize,
    pub objective: f64,
    pub improved: bool,
    pub elapsed_ms: f64,
}

impl From<&IterationRecord> for HistoryRow {
    fn from(row: &IterationRecord) -> Self {
        Self {
            t: row.t,
            phase: row.phase.index() as u8,
            k: row.shake_power,
            sample_size: row.sample_size,
            objective: row.objective,
            improved: row.improved,
            elapsed_ms: row.elapsed_ms,
        }
    }
}

/// The persisted outcome of one run. Labels live in a sidecar file (one
/// integer per line) so documents stay small.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub algorithm: String,
    pub config: ConfigEcho,
    pub clusters: usize,
    pub centroids: Vec<Vec<f64>>,
    pub full_objective: f64,
    pub labels_path: String,
    pub seed: u64,
    pub total_wall_ms: f64,
    pub history: Vec<HistoryRow>,
}

impl ResultDocument {
    fn validate(&self) -> Result<(), IoError> {
        if !self.full_objective.is_finite() {
            return Err(IoError::NonFiniteField {
                field: "full_objective",
            });
        }
        if self
            .centroids
            .iter()
            .flatten()
            .any(|value| !value.is_finite())
        {
            return Err(IoError::NonFiniteField { field: "centroids" });
        }
        if self.history.iter().any(|row| !row.objective.is_finite()) {
            return Err(IoError::NonFiniteField {
                field: "history.objective",
            });
        }
        Ok(())
    }
}

/// Serializes a validated document as pretty JSON.
pub fn write_result(document: &ResultDocument, path: impl AsRef<Path>) -> Result<(), IoError> {
    document.validate()?;
    let mut text = serde_json::to_string_pretty(document)
        .map_err(|e| IoError::Malformed(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Reads a document back, checking the schema version before the shape.
pub fn read_result(path: impl AsRef<Path>) -> Result<ResultDocument, IoError> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| IoError::Malformed(e.to_string()))?;
    let version = value
        .get("schema_version")
        .ok_or(IoError::MissingSchemaVersion)?
        .as_u64()
        .ok_or(IoError::MissingSchemaVersion)?;
    if version != u64::from(SCHEMA_VERSION) {
        return Err(IoError::SchemaVersion {
            found: version,
            supported: SCHEMA_VERSION,
        });
    }
    serde_json::from_value(value).map_err(|e| IoError::Malformed(e.to_string()))
}

/// Writes cluster labels, one integer per line.
pub fn write_labels(labels: &[usize], path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut text = String::with_capacity(labels.len() * 2);
    for label in labels {
        text.push_str(&label.to_string());
        text.push('\n');
    }
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_labels(path: impl AsRef<Path>) -> Result<Vec<usize>, IoError> {
    let text = std::fs::read_to_string(&path)?;
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            line.trim().parse().map_err(|_| IoError::ParseNumber {
                path: path.as_ref().display().to_string(),
                line: i + 1,
                token: line.to_string(),
            })
        })
        .collect()
}

const HISTORY_HEADER: &str = "t,phase,k,sample_size,objective,improved,elapsed_ms";

/// Renders history rows as CSV with a fixed header; one line per iteration.
pub fn history_csv_string(rows: &[HistoryRow]) -> String {
    let mut text = String::from(HISTORY_HEADER);
    text.push('\n');
    for row in rows {
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.t,
            row.phase,
            row.k,
            row.sample_size,
            row.objective,
            u8::from(row.improved),
            row.elapsed_ms,
        ));
    }
    text
}

pub fn write_history_csv(rows: &[HistoryRow], path: impl AsRef<Path>) -> Result<(), IoError> {
    std::fs::write(path, history_csv_string(rows))?;
    Ok(())
}

pub fn read_history_csv(path: impl AsRef<Path>) -> Result<Vec<HistoryRow>, IoError> {
    let text = std::fs::read_to_string(&path)?;
    let name = path.as_ref().display().to_string();
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == HISTORY_HEADER => {}
        _ => {
            return Err(IoError::Malformed(format!(
                "{name}: missing history header"
            )))
        }
    }
    lines
        .map(|(i, line)| parse_history_row(line, &name, i + 1))
        .collect()
}

fn parse_history_row(line: &str, name: &str, line_no: usize) -> Result<HistoryRow, IoError> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 7 {
        return Err(IoError::Malformed(format!(
            "{name}:{line_no}: expected 7 columns, found {}",
            fields.len()
        )));
    }
    let parse = |token: &str| -> Result<f64, IoError> {
        token.parse().map_err(|_| IoError::ParseNumber {
            path: name.to_string(),
            line: line_no,
            token: token.to_string(),
        })
    };
    Ok(HistoryRow {
        t: parse(fields[0])? as u64,
        phase: parse(fields[1])? as u8,
        k: parse(fields[2])? as u32,
        sample_size: parse(fields[3])? as usize,
        objective: parse(fields[4])?,
        improved: parse(fields[5])? != 0.0,
        elapsed_ms: parse(fields[6])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_document(rng: &mut ChaCha8Rng) -> ResultDocument {
        let clusters = rng.random_range(1..5);
        let dims = rng.random_range(1..4);
        let history_len = rng.random_range(0..20);
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            algorithm: "bigmeans".into(),
            config: ConfigEcho {
                algorithm: "bigmeans".into(),
                clusters,
                sample_size: Some(rng.random_range(1..100)),
                sample_min: None,
                sample_max: None,
                iterations: rng.random_range(1..1000),
                seed: rng.random(),
                workers: rng.random_range(1..8),
                shake_min: None,
                shake_max: None,
                reevaluate_on_new_sample: rng.random(),
            },
            clusters,
            centroids: (0..clusters)
                .map(|_| (0..dims).map(|_| rng.random_range(-100.0..100.0)).collect())
                .collect(),
            full_objective: rng.random_range(0.0..1e6),
            labels_path: "out.labels".into(),
            seed: rng.random(),
            total_wall_ms: rng.random_range(0.0..1e4),
            history: (0..history_len)
                .map(|t| HistoryRow {
                    t,
                    phase: 0,
                    k: rng.random_range(0..3),
                    sample_size: rng.random_range(1..100),
                    objective: rng.random_range(0.0..1e6),
                    improved: rng.random(),
                    elapsed_ms: rng.random_range(0.0..50.0),
                })
                .collect(),
        }
    }

    #[test]
    fn fifty_random_documents_round_trip_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("doc.json");
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..50 {
            let doc = random_document(&mut rng);
            write_result(&doc, &path).unwrap();
            let read = read_result(&path).unwrap();
            assert_eq!(doc, read);
        }
    }

    #[test]
    fn missing_schema_version_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("doc.json");
        std::fs::write(&path, "{\"algorithm\": \"bigmeans\"}").unwrap();
        assert!(matches!(
            read_result(&path),
            Err(IoError::MissingSchemaVersion)
        ));
    }

    #[test]
    fn future_schema_version_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("doc.json");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut doc = random_document(&mut rng);
        doc.schema_version = 2;
        let text = serde_json::to_string(&doc).unwrap();
        std::fs::write(&path, text).unwrap();
        assert!(matches!(
            read_result(&path),
            Err(IoError::SchemaVersion { found: 2, .. })
        ));
    }

    #[test]
    fn non_finite_objective_is_refused_at_write() {
        let dir = tempfile::tempdir().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut doc = random_document(&mut rng);
        doc.full_objective = f64::INFINITY;
        assert!(matches!(
            write_result(&doc, dir.path().join("doc.json")),
            Err(IoError::NonFiniteField { .. })
        ));
    }

    #[test]
    fn history_csv_has_one_row_per_iteration_and_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("history.csv");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let doc = loop {
            let doc = random_document(&mut rng);
            if !doc.history.is_empty() {
                break doc;
            }
        };
        write_history_csv(&doc.history, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), doc.history.len() + 1);
        assert!(text.starts_with("t,phase,k,sample_size,objective,improved,elapsed_ms\n"));
        let read = read_history_csv(&path).unwrap();
        assert_eq!(read, doc.history);
    }

    #[test]
    fn labels_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("labels.txt");
        let labels = vec![0usize, 2, 1, 1, 0, 2];
        write_labels(&labels, &path).unwrap();
        assert_eq!(read_labels(&path).unwrap(), labels);
    }
}
