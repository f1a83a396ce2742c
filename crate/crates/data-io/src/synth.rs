use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mssc_kernel::Dataset;

use crate::IoError;

/// A generated mixture with its ground truth.
#[derive(Debug, Clone)]
pub struct GeneratedMixture {
    pub dataset: Dataset,
    pub true_centers: Vec<Vec<f64>>,
    pub true_labels: Vec<usize>,
}

/// Isotropic Gaussian blobs: `points_per_center` draws around each center
/// with standard deviation `sigma`. Byte-identical for a fixed seed.
pub fn gen_gaussian_mixture(
    centers: &[Vec<f64>],
    sigma: f64,
    points_per_center: usize,
    seed: u64,
) -> Result<GeneratedMixture, IoError> {
    if centers.is_empty() {
        return Err(IoError::Malformed("mixture needs at least one center".into()));
    }
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(IoError::Malformed("sigma must be positive and finite".into()));
    }
    if points_per_center == 0 {
        return Err(IoError::Malformed(
            "points_per_center must be at least 1".into(),
        ));
    }
    let dims = centers[0].len();
    if dims == 0 || centers.iter().any(|c| c.len() != dims) {
        return Err(IoError::Malformed(
            "centers must share one nonzero dimension".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(centers.len() * points_per_center);
    let mut labels = Vec::with_capacity(rows.capacity());
    for (label, center) in centers.iter().enumerate() {
        for _ in 0..points_per_center {
            let row = center
                .iter()
                .map(|&c| c + sigma * standard_normal(&mut rng))
                .collect();
            rows.push(row);
            labels.push(label);
        }
    }
    Ok(GeneratedMixture {
        dataset: Dataset::from_rows(rows)?,
        true_centers: centers.to_vec(),
        true_labels: labels,
    })
}

/// One standard-normal draw via the Box-Muller transform (the second value
/// of each pair is discarded to keep the stream layout simple).
fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Grid-arranged centers for synthetic suites: (0,0), (d,0), (2d,0),
/// (0,d), ... for spacing `d`.
pub fn grid_centers(count: usize, spacing: f64) -> Vec<Vec<f64>> {
    (0..count)
        .map(|i| vec![(i % 3) as f64 * spacing, (i / 3) as f64 * spacing])
        .collect()
}

/// [`grid_centers`] at unit spacing.
pub fn unit_grid_centers(count: usize) -> Vec<Vec<f64>> {
    grid_centers(count, 1.0)
}
