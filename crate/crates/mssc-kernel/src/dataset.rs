use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::Rng;

use crate::error::MsscError;

static NEXT_DATASET_ID: AtomicU64 = AtomicU64::new(1);

/// Process-unique handle identifying a loaded dataset.
///
/// Sample references carry the id of the dataset they were drawn from, so an
/// attempt to resolve a sample against the wrong dataset is caught instead of
/// silently indexing into unrelated rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DatasetId(u64);

impl fmt::Display for DatasetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An immutable matrix of finite reals: `rows` points with `cols` features.
#[derive(Debug, Clone)]
pub struct Dataset {
    id: DatasetId,
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from row vectors, validating shape and finiteness.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, MsscError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MsscError::EmptyDataset);
        }
        let cols = rows[0].len();
        let mut values = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MsscError::RaggedRow {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(MsscError::NonFiniteValue { row: r, col: c });
                }
                values.push(*v);
            }
        }
        Ok(Self::from_parts(rows.len(), cols, values))
    }

    /// Builds a dataset from a row-major flat buffer.
    pub fn from_flat(values: Vec<f64>, cols: usize) -> Result<Self, MsscError> {
        if cols == 0 || values.is_empty() || values.len() % cols != 0 {
            return Err(MsscError::EmptyDataset);
        }
        let rows = values.len() / cols;
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(MsscError::NonFiniteValue {
                    row: i / cols,
                    col: i % cols,
                });
            }
        }
        Ok(Self::from_parts(rows, cols, values))
    }

    fn from_parts(rows: usize, cols: usize, values: Vec<f64>) -> Self {
        Self {
            id: DatasetId(NEXT_DATASET_ID.fetch_add(1, Ordering::Relaxed)),
            rows,
            cols,
            values,
        }
    }

    pub fn id(&self) -> DatasetId {
        self.id
    }

    /// Number of points.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of features per point.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn point(&self, row: usize) -> &[f64] {
        &self.values[row * self.cols..(row + 1) * self.cols]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// A view over every row.
    pub fn full_view(&self) -> SampleView<'_> {
        SampleView {
            dataset: self,
            indices: None,
        }
    }
}

/// A reference to a subset of a dataset's rows: the sampled input a landscape
/// is evaluated on.
///
/// Indices are strictly increasing, so two references compare equal exactly
/// when they select the same rows of the same dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRef {
    dataset_id: DatasetId,
    indices: Vec<usize>,
}

impl SampleRef {
    /// Wraps explicit indices; they must be strictly increasing and in range.
    pub fn new(dataset: &Dataset, indices: Vec<usize>) -> Result<Self, MsscError> {
        for pair in indices.windows(2) {
            if pair[0] >= pair[1] {
                return Err(MsscError::UnsortedIndices);
            }
        }
        if let Some(&last) = indices.last() {
            if last >= dataset.rows() {
                return Err(MsscError::IndexOutOfRange {
                    index: last,
                    rows: dataset.rows(),
                });
            }
        }
        Ok(Self {
            dataset_id: dataset.id(),
            indices,
        })
    }

    /// Every row of the dataset; size `m` degenerates to the full data.
    pub fn full(dataset: &Dataset) -> Self {
        Self {
            dataset_id: dataset.id(),
            indices: (0..dataset.rows()).collect(),
        }
    }

    /// Draws `size` distinct rows uniformly at random, without replacement.
    ///
    /// Uses Floyd's subset-sampling algorithm: `size` draws regardless of the
    /// dataset's row count.
    pub fn draw_uniform<R: Rng + ?Sized>(
        dataset: &Dataset,
        size: usize,
        rng: &mut R,
    ) -> Result<Self, MsscError> {
        let rows = dataset.rows();
        if size > rows {
            return Err(MsscError::SampleTooLarge {
                requested: size,
                rows,
            });
        }
        let mut chosen = std::collections::BTreeSet::new();
        for j in rows - size..rows {
            let candidate = rng.random_range(0..=j);
            if !chosen.insert(candidate) {
                chosen.insert(j);
            }
        }
        Ok(Self {
            dataset_id: dataset.id(),
            indices: chosen.into_iter().collect(),
        })
    }

    pub fn dataset_id(&self) -> DatasetId {
        self.dataset_id
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Sample size `s`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Resolves the reference against its dataset, checking identity.
    pub fn view<'a>(&'a self, dataset: &'a Dataset) -> Result<SampleView<'a>, MsscError> {
        if self.dataset_id != dataset.id() {
            return Err(MsscError::DatasetMismatch {
                expected: self.dataset_id,
                found: dataset.id(),
            });
        }
        Ok(SampleView {
            dataset,
            indices: Some(&self.indices),
        })
    }
}

/// A resolved, borrow-checked window onto dataset rows.
#[derive(Clone, Copy)]
pub struct SampleView<'a> {
    dataset: &'a Dataset,
    indices: Option<&'a [usize]>,
}

impl<'a> SampleView<'a> {
    pub fn len(&self) -> usize {
        match self.indices {
            Some(ix) => ix.len(),
            None => self.dataset.rows(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dims(&self) -> usize {
        self.dataset.cols()
    }

    /// The `i`-th point of the sample (not of the underlying dataset).
    pub fn point(&self, i: usize) -> &'a [f64] {
        match self.indices {
            Some(ix) => self.dataset.point(ix[i]),
            None => self.dataset.point(i),
        }
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &'a [f64]> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_finite_values() {
        let err = Dataset::from_rows(vec![vec![0.0, f64::NAN]]).unwrap_err();
        assert!(matches!(err, MsscError::NonFiniteValue { row: 0, col: 1 }));
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = Dataset::from_rows(vec![vec![0.0, 1.0], vec![2.0]]).unwrap_err();
        assert!(matches!(
            err,
            MsscError::RaggedRow {
                row: 1,
                expected: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn rejects_empty() {
        assert!(matches!(
            Dataset::from_rows(vec![]),
            Err(MsscError::EmptyDataset)
        ));
    }

    #[test]
    fn uniform_draw_is_sorted_and_distinct() {
        let data = Dataset::from_rows((0..100).map(|i| vec![i as f64]).collect()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sample = SampleRef::draw_uniform(&data, 40, &mut rng).unwrap();
        assert_eq!(sample.len(), 40);
        assert!(sample.indices().windows(2).all(|w| w[0] < w[1]));
        assert!(sample.indices().iter().all(|&i| i < 100));
    }

    #[test]
    fn full_size_draw_is_the_whole_dataset() {
        let data = Dataset::from_rows((0..10).map(|i| vec![i as f64]).collect()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sample = SampleRef::draw_uniform(&data, 10, &mut rng).unwrap();
        assert_eq!(sample.indices(), (0..10).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn oversized_draw_errors() {
        let data = Dataset::from_rows(vec![vec![0.0]]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            SampleRef::draw_uniform(&data, 2, &mut rng),
            Err(MsscError::SampleTooLarge { .. })
        ));
    }

    #[test]
    fn view_checks_dataset_identity() {
        let a = Dataset::from_rows(vec![vec![0.0]]).unwrap();
        let b = Dataset::from_rows(vec![vec![0.0]]).unwrap();
        let sample = SampleRef::full(&a);
        assert!(sample.view(&a).is_ok());
        assert!(matches!(
            sample.view(&b),
            Err(MsscError::DatasetMismatch { .. })
        ));
    }
}
