use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::ParametricMatrix;
use crate::spectra::jacobi::{jacobi_eigenvalues, DEFAULT_TOL};

/// Ascending eigenvalues on a uniform parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub lambdas: Vec<f64>,
    pub eigenvalues: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> impl Iterator<Item = (f64, &[f64])> {
        self.lambdas
            .iter()
            .copied()
            .zip(self.eigenvalues.iter().map(Vec::as_slice))
    }
}

fn grid(lambda_min: f64, lambda_max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::domain("a sweep needs at least 2 steps"));
    }
    if !(lambda_min.is_finite() && lambda_max.is_finite() && lambda_min < lambda_max) {
        return Err(Error::domain(format!(
            "invalid sweep range {lambda_min}:{lambda_max}"
        )));
    }
    let span = lambda_max - lambda_min;
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i == steps - 1 {
                lambda_max
            } else {
                lambda_min + span * i as f64 / last
            }
        })
        .collect())
}

fn row(h: &ParametricMatrix, lambda: f64) -> Result<Vec<f64>> {
    jacobi_eigenvalues(&h.eval_at_f64(lambda)?, DEFAULT_TOL)
}

/// Rows are computed concurrently; output is identical to
/// [`sweep_sequential`].
pub fn sweep(
    h: &ParametricMatrix,
    lambda_min: f64,
    lambda_max: f64,
    steps: usize,
) -> Result<SweepTable> {
    let lambdas = grid(lambda_min, lambda_max, steps)?;
    let eigenvalues = lambdas
        .par_iter()
        .map(|&l| row(h, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        lambdas,
        eigenvalues,
    })
}

pub fn sweep_sequential(
    h: &ParametricMatrix,
    lambda_min: f64,
    lambda_max: f64,
    steps: usize,
) -> Result<SweepTable> {
    let lambdas = grid(lambda_min, lambda_max, steps)?;
    let eigenvalues = lambdas
        .iter()
        .map(|&l| row(h, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        lambdas,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::benzene;

    #[test]
    fn benzene_grid_points() {
        let t = sweep(&benzene(), -2.0, 2.0, 401).unwrap();
        assert_eq!(t.lambdas.len(), 401);
        assert_eq!(t.lambdas[300], 1.0);
        let expected = [-2.0, -1.0, -1.0, 1.0, 1.0, 2.0];
        assert!(t.eigenvalues[300]
            .iter()
            .zip(expected)
            .all(|(a, b)| (a - b).abs() < 1e-8));
        assert_eq!(t.lambdas[200], 0.0);
        let expected = [-1.0, -1.0, -1.0, 1.0, 1.0, 1.0];
        assert!(t.eigenvalues[200]
            .iter()
            .zip(expected)
            .all(|(a, b)| (a - b).abs() < 1e-10));
    }

    #[test]
    fn two_steps_hit_the_endpoints() {
        let t = sweep(&benzene(), -0.3, 0.7, 2).unwrap();
        assert_eq!(t.lambdas, vec![-0.3, 0.7]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = sweep(&benzene(), -2.0, 2.0, 57).unwrap();
        let b = sweep_sequential(&benzene(), -2.0, 2.0, 57).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_grids() {
        assert!(sweep(&benzene(), 0.0, 1.0, 1).is_err());
        assert!(sweep(&benzene(), 1.0, 1.0, 5).is_err());
        assert!(sweep(&benzene(), f64::NAN, 1.0, 5).is_err());
    }
}
