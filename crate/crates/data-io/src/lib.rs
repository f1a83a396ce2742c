//! File-format edges of the workspace: matrix ingestion (CSV or whitespace
//! columns), deterministic Gaussian-mixture generation for benchmarks, and
//! the versioned result document with its label sidecar and history CSV.

mod load;
mod result;
mod synth;

pub use load::{load_dataset, load_dataset_from_str, MatrixFormat};
pub use result::{
    history_csv_string, read_history_csv, read_labels, read_result, write_history_csv,
    write_labels, write_result, ConfigEcho, HistoryRow, ResultDocument, SCHEMA_VERSION,
};
pub use synth::{gen_gaussian_mixture, grid_centers, unit_grid_centers, GeneratedMixture};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{path}: file is empty")]
    EmptyFile { path: String },
    #[error("{path}:{line}: cannot parse '{token}' as a number")]
    ParseNumber {
        path: String,
        line: usize,
        token: String,
    },
    #[error("{path}:{line}: value is not finite")]
    NonFinite { path: String, line: usize },
    #[error("{path}:{line}: row has {found} columns, expected {expected}")]
    RaggedRow {
        path: String,
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Kernel(#[from] mssc_kernel::MsscError),
    #[error("result document has no schema_version field")]
    MissingSchemaVersion,
    #[error("unsupported schema version {found} (supported: {supported})")]
    SchemaVersion { found: u64, supported: u32 },
    #[error("malformed result document: {0}")]
    Malformed(String),
    #[error("result document field {field} must be finite")]
    NonFiniteField { field: &'static str },
}
