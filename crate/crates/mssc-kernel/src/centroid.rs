use crate::error::MsscError;

/// A candidate clustering solution: `p` centroids in `dims`-dimensional
/// space, each with a degeneracy flag.
///
/// A degenerate slot is one that currently owns no points (or was never
/// initialized). Its coordinates are kept but excluded from every assignment
/// and objective computation until a reseed repairs it.
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidSet {
    dims: usize,
    coords: Vec<f64>,
    degenerate: Vec<bool>,
}

impl CentroidSet {
    /// Builds an all-active set from row vectors, validating finiteness.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, MsscError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MsscError::NoCentroids);
        }
        let dims = rows[0].len();
        let mut coords = Vec::with_capacity(rows.len() * dims);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != dims {
                return Err(MsscError::PointDimensionMismatch {
                    expected: dims,
                    found: row.len(),
                });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(MsscError::NonFiniteCentroid { index: j });
            }
            coords.extend_from_slice(row);
        }
        let degenerate = vec![false; rows.len()];
        Ok(Self {
            dims,
            coords,
            degenerate,
        })
    }

    /// `p` uninitialized slots, all flagged degenerate, coordinates zeroed.
    pub fn all_degenerate(clusters: usize, dims: usize) -> Self {
        Self {
            dims,
            coords: vec![0.0; clusters * dims],
            degenerate: vec![true; clusters],
        }
    }

    /// Cluster count `p`.
    pub fn cluster_count(&self) -> usize {
        self.degenerate.len()
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.coords[j * self.dims..(j + 1) * self.dims]
    }

    pub fn row_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.coords[j * self.dims..(j + 1) * self.dims]
    }

    pub fn is_degenerate(&self, j: usize) -> bool {
        self.degenerate[j]
    }

    pub fn set_degenerate(&mut self, j: usize, flag: bool) {
        self.degenerate[j] = flag;
    }

    pub fn any_degenerate(&self) -> bool {
        self.degenerate.iter().any(|&d| d)
    }

    pub fn degenerate_slots(&self) -> Vec<usize> {
        (0..self.cluster_count())
            .filter(|&j| self.degenerate[j])
            .collect()
    }

    pub fn active_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cluster_count()).filter(move |&j| !self.degenerate[j])
    }

    pub fn active_count(&self) -> usize {
        self.degenerate.iter().filter(|&&d| !d).count()
    }

    /// Drops trailing centroids, keeping the first `clusters`.
    pub fn truncate(&mut self, clusters: usize) {
        self.coords.truncate(clusters * self.dims);
        self.degenerate.truncate(clusters);
    }

    /// Appends `count` degenerate slots awaiting a reseed.
    pub fn push_degenerate_slots(&mut self, count: usize) {
        self.coords.extend(std::iter::repeat_n(0.0, count * self.dims));
        self.degenerate.extend(std::iter::repeat_n(true, count));
    }

    /// Centroid rows as owned vectors, in slot order.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.cluster_count())
            .map(|j| self.row(j).to_vec())
            .collect()
    }
}

/// Cluster membership for a point list: `labels[i]` is the centroid slot the
/// `i`-th point is assigned to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAssignment {
    labels: Vec<usize>,
}

impl LabelAssignment {
    pub(crate) fn new(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    /// Wraps labels computed by a caller-side assignment.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}
