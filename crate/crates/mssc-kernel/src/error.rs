use thiserror::Error;

use crate::dataset::DatasetId;

/// Errors raised by the clustering kernel.
#[derive(Debug, Error)]
pub enum MsscError {
    #[error("dataset must have at least one row and one column")]
    EmptyDataset,
    #[error("dataset value at row {row}, column {col} is not finite")]
    NonFiniteValue { row: usize, col: usize },
    #[error("row {row} has {found} columns, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("sample references dataset {found}, expected {expected}")]
    DatasetMismatch { expected: DatasetId, found: DatasetId },
    #[error("sample index {index} out of range for dataset with {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("sample indices must be strictly increasing")]
    UnsortedIndices,
    #[error("sample size {requested} exceeds dataset rows {rows}")]
    SampleTooLarge { requested: usize, rows: usize },
    #[error("centroid count must be at least 1")]
    NoCentroids,
    #[error("centroid {index} has a non-finite coordinate")]
    NonFiniteCentroid { index: usize },
    #[error("objective undefined on degenerate centroids")]
    DegenerateCentroid,
    #[error("operation requires a nonempty sample")]
    EmptySample,
    #[error("cannot seed centroids from an empty sample")]
    CannotSeedEmptySample,
    #[error("point has {found} coordinates, expected {expected}")]
    PointDimensionMismatch { expected: usize, found: usize },
    #[error(
        "instance too large for exhaustive search: {points} points / {clusters} clusters \
         (limits {max_points} / {max_clusters})"
    )]
    InstanceTooLarge {
        points: usize,
        clusters: usize,
        max_points: usize,
        max_clusters: usize,
    },
}
